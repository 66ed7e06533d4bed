#include "permcover/json_io.hpp"

#include <regex>

#include "permcover/error.hpp"

namespace permcover::json_io {

namespace {

template <class F> auto guarded(const char *what, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

json sequence_to_json(const LambdaTrace::Sequence &s) {
  json out = json::array();
  for (const auto &[i, v] : s)
    out.push_back({i, v});
  return out;
}

LambdaTrace::Sequence sequence_from_json(const json &j) {
  LambdaTrace::Sequence s;
  for (const auto &e : j)
    s.emplace_back(e.at(0).get<int>(), e.at(1).get<long long>());
  return s;
}

} // namespace

json to_json(const Permutation &f) { return f.to_string(); }

Permutation permutation_from_json(const json &j, int degree) {
  if (j.is_string())
    return Permutation::parse(j.get<std::string>(), degree);
  if (j.is_array())
    return guarded("permutation", [&] { return Permutation(j.get<std::vector<int>>()); });
  throw ValidationError("permutation must be a string or an integer array");
}

json to_json(const CodeDescriptor &d) {
  json j;
  j["kind"] = to_string(d.kind());
  switch (d.kind()) {
  case CodeKind::cyclic:
  case CodeKind::dihedral:
  case CodeKind::explicit_set:
    j["n"] = d.degree();
    break;
  case CodeKind::product: {
    const auto parts = d.profile().parts();
    j["parts"] = std::vector<int>(parts.begin(), parts.end());
    break;
  }
  case CodeKind::relabeled:
    j["base"] = to_json(d.base());
    j["pi"] = to_json(d.conjugator());
    break;
  }
  return j;
}

CodeDescriptor descriptor_from_json(const json &j) {
  return guarded("code descriptor", [&]() -> CodeDescriptor {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "cyclic")
      return CodeDescriptor::cyclic(field(j, "n").get<int>());
    if (kind == "dihedral")
      return CodeDescriptor::dihedral(field(j, "n").get<int>());
    if (kind == "product")
      return CodeDescriptor::product(FactorProfile(field(j, "parts").get<std::vector<int>>()));
    if (kind == "relabeled") {
      auto base = descriptor_from_json(field(j, "base"));
      const int n = base.degree();
      return CodeDescriptor::relabeled(std::move(base), permutation_from_json(field(j, "pi"), n));
    }
    if (kind == "explicit")
      return CodeDescriptor::explicit_set(field(j, "n").get<int>());
    throw ValidationError("unknown code kind '" + kind + "'");
  });
}

json to_json(const GroupCode &code) {
  const auto &d = code.descriptor();
  if (d.kind() != CodeKind::explicit_set && d.root().kind() != CodeKind::explicit_set)
    return to_json(d);
  json j;
  j["kind"] = "explicit";
  j["n"] = code.degree();
  j["elements"] = json::array();
  for (const auto &g : code.elements())
    j["elements"].push_back(to_json(g));
  return j;
}

GroupCode code_from_json(const json &j) {
  return guarded("code", [&]() -> GroupCode {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "explicit") {
      const int n = field(j, "n").get<int>();
      std::vector<Permutation> elements;
      for (const auto &e : field(j, "elements")) {
        elements.push_back(permutation_from_json(e, n));
        if (elements.back().degree() != n)
          throw ValidationError("explicit element " + elements.back().to_string() + " is not of degree " +
                                std::to_string(n));
      }
      if (elements.empty())
        throw ValidationError("explicit code needs at least one element");
      return make_explicit(n, std::move(elements));
    }
    if (kind == "relabeled") {
      const GroupCode base = code_from_json(field(j, "base"));
      return relabel(base, permutation_from_json(field(j, "pi"), base.degree()));
    }
    return build_code(descriptor_from_json(j));
  });
}

GroupCode code_from_text(const std::string &text) {
  std::smatch m;
  static const std::regex cyclic_re(R"(\s*G_\{?(\d+)\}?\s*)");
  static const std::regex dihedral_re(R"(\s*D_\{?(\d+)\}?\s*)");
  static const std::regex product_re(R"(\s*G_\{(\d+(?:\s*,\s*\d+)+)\}\s*)");
  if (std::regex_match(text, m, cyclic_re))
    return make_cyclic(std::stoi(m[1]));
  if (std::regex_match(text, m, dihedral_re))
    return make_dihedral(std::stoi(m[1]));
  if (std::regex_match(text, m, product_re)) {
    std::vector<int> parts;
    const std::string list = m[1];
    static const std::regex num(R"(\d+)");
    for (auto it = std::sregex_iterator(list.begin(), list.end(), num); it != std::sregex_iterator(); ++it)
      parts.push_back(std::stoi(it->str()));
    return make_product(FactorProfile(std::move(parts)));
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError("cannot parse code '" + text + "': " + e.what());
  }
  return code_from_json(j);
}

json to_json(const PartialPlacement &placement) {
  json out = json::array();
  for (const auto &[pos, val] : placement.assignments())
    out.push_back({pos, val});
  return out;
}

PartialPlacement placement_from_json(const json &j, int degree) {
  return guarded("placement", [&] {
    PartialPlacement p(degree);
    for (const auto &e : j)
      p.assign(e.at(0).get<int>(), e.at(1).get<int>());
    return p;
  });
}

json to_json(const BoundsInterval &b) {
  json j{{"lower", b.lower}, {"upper", b.upper}};
  j["exact"] = b.exact ? json(*b.exact) : json(nullptr);
  return j;
}

json to_json(const ClampedBound &b) { return {{"value", b.value}, {"raw", b.raw}, {"clamped", b.clamped}}; }

json to_json(const RadiusResult &r) {
  json j;
  j["value"] = r.value;
  j["status"] = to_string(r.status);
  j["exact"] = r.exact();
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  j["rtilde"] = r.rtilde ? json(*r.rtilde) : json(nullptr);
  j["stats"] = {{"candidates", r.stats.candidates},
                {"wall_seconds", r.stats.wall_seconds},
                {"attempts", r.stats.attempts}};
  return j;
}

RadiusResult radius_result_from_json(const json &j) {
  return guarded("radius result", [&] {
    RadiusResult r;
    r.value = field(j, "value").get<int>();
    r.status = parse_radius_status(field(j, "status").get<std::string>());
    if (j.contains("witness") && !j["witness"].is_null())
      r.witness = permutation_from_json(j["witness"]);
    if (j.contains("rtilde") && !j["rtilde"].is_null())
      r.rtilde = j["rtilde"].get<int>();
    if (j.contains("stats")) {
      const auto &s = j["stats"];
      r.stats.candidates = s.value("candidates", std::uint64_t{0});
      r.stats.wall_seconds = s.value("wall_seconds", 0.0);
      r.stats.attempts = s.value("attempts", 0);
    }
    return r;
  });
}

json to_json(const WitnessBundle &w) {
  json j;
  j["family"] = to_string(w.family);
  j["family_params"] = w.family_params;
  j["code"] = to_json(w.code);
  j["r0"] = w.r0;
  j["conjugator"] = w.conjugator ? to_json(*w.conjugator) : json(nullptr);
  j["placement"] = to_json(w.placement);
  j["completed"] = to_json(w.completed);
  json trace;
  trace["regime"] = w.trace.regime;
  trace["sequences"] = json::object();
  for (const auto &[name, seq] : w.trace.sequences)
    trace["sequences"][name] = sequence_to_json(seq);
  trace["params"] = w.trace.params;
  j["trace"] = trace;
  json report;
  report["verified"] = w.report.verified;
  report["distance"] = w.report.distance;
  report["exposures"] = json::array();
  for (const auto &e : w.report.exposures)
    report["exposures"].push_back({{"element", to_json(e.element)}, {"position", e.position}, {"gap", e.gap}});
  report["unexposed_element"] =
      w.report.unexposed_element ? to_json(*w.report.unexposed_element) : json(nullptr);
  j["report"] = report;
  return j;
}

WitnessBundle witness_from_json(const json &j) {
  return guarded("witness bundle", [&] {
    auto code = descriptor_from_json(field(j, "code"));
    const int n = code.degree();
    std::optional<Permutation> conjugator;
    if (j.contains("conjugator") && !j["conjugator"].is_null())
      conjugator = permutation_from_json(j["conjugator"], n);
    WitnessBundle w{parse_witness_family(field(j, "family").get<std::string>()),
                    j.value("family_params", std::map<std::string, int>{}),
                    code,
                    field(j, "r0").get<int>(),
                    conjugator,
                    placement_from_json(field(j, "placement"), n),
                    permutation_from_json(field(j, "completed"), n),
                    {},
                    {}};
    if (j.contains("trace")) {
      const auto &t = j["trace"];
      w.trace.regime = t.value("regime", std::string{});
      if (t.contains("sequences"))
        for (const auto &[name, seq] : t["sequences"].items())
          w.trace.sequences[name] = sequence_from_json(seq);
      w.trace.params = t.value("params", std::map<std::string, long long>{});
    }
    if (j.contains("report")) {
      const auto &r = j["report"];
      w.report.verified = r.value("verified", false);
      w.report.distance = r.value("distance", 0);
      if (r.contains("exposures"))
        for (const auto &e : r["exposures"])
          w.report.exposures.push_back(
              {permutation_from_json(e.at("element"), n), e.at("position").get<int>(), e.at("gap").get<int>()});
      if (r.contains("unexposed_element") && !r["unexposed_element"].is_null())
        w.report.unexposed_element = permutation_from_json(r["unexposed_element"], n);
    }
    return w;
  });
}

json to_json(const ExposureExplanation &e) {
  json j;
  j["r"] = e.r;
  j["blocks"] = json::array();
  for (const auto &b : e.blocks) {
    json jb;
    jb["locations"] = b.block.locations;
    jb["anchor"] = b.block.anchor;
    jb["asets"] = json::array();
    for (const auto &a : b.asets)
      jb["asets"].push_back(
          {{"position", a.position}, {"target", a.target}, {"anchor", a.anchor}, {"members", a.members}});
    jb["covered_members"] = b.covered_members;
    jb["covered"] = b.covered;
    j["blocks"].push_back(jb);
  }
  j["exposed_by_asets"] = e.exposed_by_asets;
  j["exposed_direct"] = e.exposed_direct;
  j["distance"] = e.distance;
  return j;
}

json to_json(const RelabelExtrema &e) {
  return {{"n", e.n},
          {"base", to_json(e.base)},
          {"lmax", e.lmax},
          {"lmin", e.lmin},
          {"argmax", to_json(e.argmax)},
          {"argmin", to_json(e.argmin)},
          {"conjugators_solved", e.conjugators_solved},
          {"distinct_codes", e.distinct_codes},
          {"normalizer_order", e.normalizer_order}};
}

json to_json(const LminReductionReport &r) {
  return {{"p", r.p},
          {"q", r.q},
          {"lmin_pq", r.lmin_pq},
          {"lmin_p", r.lmin_p},
          {"inequality_holds", r.inequality_holds},
          {"construction_holds", r.construction_holds},
          {"conjugators_checked", r.conjugators_checked},
          {"holds", r.holds()}};
}

} // namespace permcover::json_io
