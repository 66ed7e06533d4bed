#include "cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <random>

#include "permcover/closed_forms.hpp"
#include "permcover/error.hpp"
#include "permcover/exposure.hpp"
#include "permcover/json_io.hpp"
#include "permcover/radius_solver.hpp"
#include "permcover/witnesses.hpp"

namespace permcover::cli {

namespace {

using json = json_io::json;

constexpr int table1_soft_limit = 20;

int threads_from_env() {
  const char *env = std::getenv("PERMCOVER_THREADS");
  if (env == nullptr || *env == '\0')
    return 0;
  char *end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0 || value > 4096)
    throw ValidationError(std::string("PERMCOVER_THREADS must be a non-negative integer, got '") + env + "'");
  return static_cast<int>(value);
}

void strip_timing(json &j) {
  if (j.is_object()) {
    j.erase("wall_seconds");
    for (auto &[key, value] : j.items())
      strip_timing(value);
  } else if (j.is_array()) {
    for (auto &value : j)
      strip_timing(value);
  }
}

template <class T> json optional_json(const std::optional<T> &v) { return v ? json(*v) : json(nullptr); }

template <class T> T require(const std::optional<T> &v, const char *flag, const std::string &query) {
  if (!v)
    throw ValidationError(query + " needs " + flag);
  return *v;
}

struct Globals {
  int threads = 0;
  bool no_timing = false;
  std::string format = "json";
};

// Each subcommand fills `parameters` and returns its result payload. CSV text,
// when produced, is written straight to `out`.
using Handler = std::function<json(json &parameters, std::ostream &out)>;

SolverOptions solver_options(const Globals &g) {
  SolverOptions o;
  o.threads = g.threads;
  return o;
}

} // namespace

std::string table1_annotation(int n, int value) {
  const auto bounds = dn_bounds(n);
  if (!bounds.contains(value))
    throw VerificationError("r(D_" + std::to_string(n) + ")=" + std::to_string(value) + " lies outside [" +
                            std::to_string(bounds.lower) + "," + std::to_string(bounds.upper) + "]");
  if (bounds.exact)
    return "e";
  return value == bounds.lower ? "l" : "u";
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Covering radii of permutation group codes under the l-infinity metric", "permcover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(PERMCOVER_VERSION));

  Globals g;
  std::optional<int> threads_flag;
  app.add_option("--threads", threads_flag, "Worker threads (0: OpenMP default; env PERMCOVER_THREADS)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--no-timing", g.no_timing, "Omit wall-clock fields so output is byte-reproducible");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  Handler handler;
  std::string command;

  // formulas
  auto *formulas = app.add_subcommand("formulas", "Evaluate a closed form");
  std::string query;
  std::optional<int> fn, fp, fq;
  std::vector<int> fparts;
  formulas
      ->add_option("--query", query, "Formula name")
      ->required()
      ->check(CLI::IsMember({"r_cyclic", "lmax_cyclic", "r_pq", "lmax_pq", "r_product", "lmax_product", "dn_bounds",
                             "dn_weak_lower", "lmin_cyclic_lower"}));
  formulas->add_option("--n", fn);
  formulas->add_option("--p", fp);
  formulas->add_option("--q", fq);
  formulas->add_option("--parts", fparts, "Factor profile, e.g. 3,3,2")->delimiter(',');
  formulas->callback([&] {
    command = "formulas";
    handler = [&](json &params, std::ostream &) {
      json r;
      r["query"] = query;
      if (query == "r_cyclic" || query == "lmax_cyclic" || query == "dn_bounds" || query == "dn_weak_lower" ||
          query == "lmin_cyclic_lower") {
        const int n = require(fn, "--n", query);
        r["n"] = n;
        if (query == "r_cyclic")
          r["value"] = r_cyclic(n);
        else if (query == "lmax_cyclic")
          r["value"] = lmax_cyclic(n);
        else if (query == "dn_bounds")
          r["value"] = json_io::to_json(dn_bounds(n));
        else if (query == "dn_weak_lower")
          r["value"] = dn_weak_lower(n);
        else {
          const auto b = lmin_cyclic_lower(n);
          r["value"] = b.value;
          r["raw"] = b.raw;
          r["clamped"] = b.clamped;
        }
      } else if (query == "r_pq" || query == "lmax_pq") {
        const int p = require(fp, "--p", query), q = require(fq, "--q", query);
        r["p"] = p;
        r["q"] = q;
        r["value"] = query == "r_pq" ? r_pq(p, q) : lmax_pq(p, q);
      } else {
        if (fparts.empty())
          throw ValidationError(query + " needs --parts");
        const FactorProfile profile(fparts);
        r["parts"] = fparts;
        r["value"] = query == "r_product" ? r_product(profile) : lmax_product(profile);
      }
      params = r;
      params.erase("value");
      params.erase("raw");
      params.erase("clamped");
      return r;
    };
  });

  // witness
  auto *witness = app.add_subcommand("witness", "Build and verify an explicit exposed witness");
  std::string family;
  std::optional<int> wn, wp, wq;
  bool randomize = false;
  std::uint64_t seed = 0;
  witness->add_option("--family", family)->required()->check(CLI::IsMember({"pq", "lmax", "dn", "dn_refined"}));
  witness->add_option("--n", wn);
  witness->add_option("--p", wp);
  witness->add_option("--q", wq);
  witness->add_flag("--randomize-completion", randomize, "Fill free positions in a seeded random order");
  witness->add_option("--seed", seed, "Seed for --randomize-completion");
  witness->callback([&] {
    command = "witness";
    handler = [&](json &params, std::ostream &) {
      params["family"] = family;
      WitnessBundle bundle = [&] {
        switch (parse_witness_family(family)) {
        case WitnessFamily::pq:
        case WitnessFamily::lmax: {
          const int p = require(wp, "--p", family), q = require(wq, "--q", family);
          params["p"] = p;
          params["q"] = q;
          return family == "pq" ? witness_pq(p, q) : witness_lmax(p, q);
        }
        case WitnessFamily::dn:
        case WitnessFamily::dn_refined: {
          const int n = require(wn, "--n", family);
          params["n"] = n;
          return family == "dn" ? witness_dn(n) : witness_dn_refined(n);
        }
        }
        throw ValidationError("unknown family");
      }();
      if (randomize) {
        params["randomize_completion"] = true;
        params["seed"] = seed;
        std::mt19937_64 rng(seed);
        auto unused = bundle.placement.unused_values();
        std::shuffle(unused.begin(), unused.end(), rng);
        bundle.completed = bundle.placement.complete_with(unused);
        bundle.report = verify_witness(bundle);
        if (!bundle.report.verified)
          throw VerificationError("randomized completion " + bundle.completed.to_string() + " is not " +
                                  std::to_string(bundle.r0) + "-exposed");
      }
      return json_io::to_json(bundle);
    };
  });

  // radius
  auto *radius = app.add_subcommand("radius", "Compute the covering radius of a code");
  std::string code_text;
  std::optional<int> rtilde;
  bool force_bf = false, formula_only = false, serial = false, cap_override = false;
  int degree_cap = 9;
  radius->add_option("--code", code_text, "Code as JSON descriptor or G_n / D_n / G_{p,q}")->required();
  radius->add_option("--rtilde", rtilde, "Run only the restricted search at this rtilde");
  radius->add_flag("--force-bruteforce", force_bf, "Exhaustive search over S_n");
  radius->add_flag("--formula-only", formula_only, "Closed form or proven bound, no search");
  radius->add_flag("--serial", serial, "Use the serial reference kernels");
  radius->add_flag("--cap-override", cap_override, "Allow brute force beyond the degree cap");
  radius->add_option("--degree-cap", degree_cap, "Brute-force degree cap")->capture_default_str();
  radius->callback([&] {
    command = "radius";
    handler = [&](json &params, std::ostream &) {
      const GroupCode code = json_io::code_from_text(code_text);
      params["code"] = json_io::to_json(code.descriptor());
      params["rtilde"] = optional_json(rtilde);
      params["force_bruteforce"] = force_bf;
      params["formula_only"] = formula_only;
      params["kernel"] = serial ? "serial" : "parallel";
      params["cap_override"] = cap_override;
      params["degree_cap"] = degree_cap;
      SolverOptions o = solver_options(g);
      o.kernel = serial ? KernelMode::serial : KernelMode::parallel;
      o.override_cap = cap_override;
      o.degree_cap = degree_cap;
      RadiusResult r;
      if (formula_only)
        r = radius_from_formulas(code);
      else if (rtilde)
        r = radius_restricted(code, *rtilde, o);
      else if (force_bf)
        r = radius_bruteforce(code, o);
      else
        r = radius_auto(code, o);
      return json_io::to_json(r);
    };
  });

  // table1
  auto *table1 = app.add_subcommand("table1", "Exact r(D_n) over a range of n with bound annotations");
  int from = 3, to = 20;
  bool force = false;
  table1->add_option("--from", from)->capture_default_str();
  table1->add_option("--to", to)->capture_default_str();
  table1->add_flag("--force", force, "Allow n beyond 20");
  table1->callback([&] {
    command = "table1";
    handler = [&](json &params, std::ostream &os) {
      params["from"] = from;
      params["to"] = to;
      params["force"] = force;
      if (from < 3 || to < from)
        throw ValidationError("table1 needs 3 <= from <= to");
      if (to > table1_soft_limit && !force)
        throw InfeasibleError("table1 beyond n=" + std::to_string(table1_soft_limit) + " needs --force");
      json rows = json::array();
      const SolverOptions o = solver_options(g);
      for (int n = from; n <= to; ++n) {
        const RadiusResult r = radius_auto(make_dihedral(n), o);
        rows.push_back({{"n", n},
                        {"r", r.value},
                        {"annotation", table1_annotation(n, r.value)},
                        {"status", to_string(r.status)},
                        {"witness", json_io::to_json(*r.witness)},
                        {"wall_seconds", r.stats.wall_seconds}});
      }
      if (g.format == "csv") {
        os << "n,r,annotation\n";
        for (const auto &row : rows)
          os << row["n"].get<int>() << ',' << row["r"].get<int>() << ',' << row["annotation"].get<std::string>()
             << '\n';
      }
      return json{{"rows", rows}};
    };
  });

  // explain
  auto *explain = app.add_subcommand("explain", "A-set table behind the exposure of f at radius r");
  std::string f_text;
  int er = 0;
  explain->add_option("--code", code_text)->required();
  explain->add_option("--f", f_text, "Permutation, one-line [..] or cycles")->required();
  explain->add_option("--r", er)->required();
  explain->callback([&] {
    command = "explain";
    handler = [&](json &params, std::ostream &) {
      const GroupCode code = json_io::code_from_text(code_text);
      const Permutation f = Permutation::parse(f_text, code.degree());
      params["code"] = json_io::to_json(code.descriptor());
      params["f"] = json_io::to_json(f);
      params["r"] = er;
      return json_io::to_json(explain_exposure(f, code, er));
    };
  });

  // extrema
  auto *extrema = app.add_subcommand("extrema", "L_max and L_min over all relabelings, or the L_min reduction check");
  std::vector<int> reduction;
  bool no_quotient = false, extrema_override = false;
  auto *code_opt = extrema->add_option("--code", code_text);
  auto *red_opt = extrema->add_option("--lmin-reduction", reduction, "p,q: check L_min(G_{p,q}) >= L_min(G_p)")
                      ->delimiter(',')
                      ->expected(2);
  code_opt->excludes(red_opt);
  extrema->add_flag("--no-quotient", no_quotient, "Solve every conjugator instead of one per distinct code");
  extrema->add_flag("--cap-override", extrema_override, "Allow degrees beyond 7");
  extrema->callback([&] {
    command = "extrema";
    handler = [&](json &params, std::ostream &) {
      ExtremaOptions o;
      o.solver = solver_options(g);
      o.quotient = !no_quotient;
      o.override_cap = extrema_override;
      params["quotient"] = o.quotient;
      params["cap_override"] = extrema_override;
      if (!reduction.empty()) {
        params["lmin_reduction"] = reduction;
        return json_io::to_json(lmin_reduction_check(reduction[0], reduction[1], o));
      }
      if (code_text.empty())
        throw ValidationError("extrema needs --code or --lmin-reduction");
      const GroupCode code = json_io::code_from_text(code_text);
      params["code"] = json_io::to_json(code.descriptor());
      return json_io::to_json(relabel_extrema(code, o));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return validation;
  }

  const auto start = std::chrono::steady_clock::now();
  json manifest;
  manifest["command"] = command;
  manifest["parameters"] = json::object();
  manifest["version"] = PERMCOVER_VERSION;
  int code = ok;
  std::string message;
  json result;
  try {
    g.threads = threads_flag ? *threads_flag : threads_from_env();
    if (g.format == "csv" && command != "table1")
      throw ValidationError("--format csv is only available for table1");
    result = handler(manifest["parameters"], out);
  } catch (const ValidationError &e) {
    code = validation, message = e.what();
  } catch (const InfeasibleError &e) {
    code = infeasible, message = e.what();
  } catch (const VerificationError &e) {
    code = verification, message = e.what();
  } catch (const BoundaryError &e) {
    code = verification, message = e.what();
  } catch (const std::exception &e) {
    code = failure, message = e.what();
  }
  manifest["threads"] = g.threads > 0 ? g.threads : omp_get_max_threads();
  if (!g.no_timing)
    manifest["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (code == ok) {
    if (g.no_timing)
      strip_timing(result);
    manifest["result"] = std::move(result);
  } else {
    manifest["error"] = {{"exit_code", code}, {"message", message}};
    err << "permcover: " << message << '\n';
  }
  // CSV owns stdout; the manifest then goes to stderr.
  std::ostream &manifest_stream = g.format == "csv" ? err : out;
  manifest_stream << manifest.dump(2) << '\n';
  return code;
}

} // namespace permcover::cli
