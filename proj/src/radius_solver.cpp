#include "permcover/radius_solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "permcover/closed_forms.hpp"
#include "permcover/error.hpp"
#include "permcover/kernels.hpp"

namespace permcover {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_witness(const GroupCode &code, const RadiusResult &result) {
  if (result.witness && distance_to_code(*result.witness, code) != result.value)
    throw VerificationError("solver witness " + result.witness->to_string() +
                            " does not attain the reported radius " + std::to_string(result.value));
}

std::vector<int> element_key(const GroupCode &code) {
  std::vector<int> key;
  key.reserve(code.size() * static_cast<std::size_t>(code.degree()));
  for (const auto &g : code.elements())
    key.insert(key.end(), g.images().begin(), g.images().end());
  return key;
}

void check_extrema_cap(int n, const ExtremaOptions &options) {
  if (n > options.degree_cap && !options.override_cap)
    throw InfeasibleError("relabeling search over S_" + std::to_string(n) + " exceeds the cap n <= " +
                          std::to_string(options.degree_cap));
}

} // namespace

std::string to_string(RadiusStatus status) {
  switch (status) {
  case RadiusStatus::exact_bruteforce:
    return "exact-bruteforce";
  case RadiusStatus::exact_restricted:
    return "exact-restricted";
  case RadiusStatus::invalid_restricted:
    return "invalid-restricted";
  case RadiusStatus::bound_only:
    return "bound-only";
  case RadiusStatus::formula:
    return "formula";
  }
  return "unknown";
}

RadiusStatus parse_radius_status(const std::string &name) {
  for (auto s : {RadiusStatus::exact_bruteforce, RadiusStatus::exact_restricted,
                 RadiusStatus::invalid_restricted, RadiusStatus::bound_only, RadiusStatus::formula})
    if (to_string(s) == name)
      return s;
  throw ValidationError("unknown radius status '" + name + "'");
}

RadiusResult radius_bruteforce(const GroupCode &code, const SolverOptions &options) {
  const int n = code.degree();
  if (n > options.degree_cap && !options.override_cap)
    throw InfeasibleError("brute force over S_" + std::to_string(n) + " exceeds the cap n <= " +
                          std::to_string(options.degree_cap) + " (override to force)");
  const auto start = Clock::now();
  const auto table = kernels::CodeTable::from(code);
  const auto outcome = options.kernel == KernelMode::serial
                           ? kernels::covering_radius_serial(table)
                           : kernels::covering_radius_omp(table, options.threads);
  RadiusResult result;
  result.value = outcome.value;
  result.status = RadiusStatus::exact_bruteforce;
  result.witness = Permutation(outcome.witness);
  result.stats = {outcome.candidates, seconds_since(start), 1};
  check_witness(code, result);
  return result;
}

RadiusResult radius_restricted(const GroupCode &code, int rtilde, const SolverOptions &options) {
  const int n = code.degree();
  if (rtilde > n - 2 || 2 * rtilde <= n - 3)
    throw ValidationError("radius_restricted: rtilde=" + std::to_string(rtilde) + " must satisfy (n-3)/2 < rtilde <= n-2 for n=" +
                          std::to_string(n));
  const auto start = Clock::now();
  const auto table = kernels::CodeTable::from(code);
  const auto outcome = options.kernel == KernelMode::serial ? kernels::restricted_serial(table, rtilde)
                                                            : kernels::restricted_omp(table, rtilde, options.threads);
  RadiusResult result;
  result.value = outcome.value;
  result.status = outcome.value >= rtilde ? RadiusStatus::exact_restricted : RadiusStatus::invalid_restricted;
  result.witness = Permutation(outcome.witness);
  result.rtilde = rtilde;
  result.stats = {outcome.representatives, seconds_since(start), 1};
  check_witness(code, result);
  return result;
}

int default_start_rtilde(const GroupCode &code) {
  const auto &d = code.descriptor();
  const int n = code.degree();
  int start;
  switch (d.kind()) {
  case CodeKind::dihedral:
    start = dn_bounds(n).lower;
    break;
  case CodeKind::cyclic:
    start = r_cyclic(n);
    break;
  case CodeKind::product: {
    const auto &profile = d.profile();
    if (profile.size() == 1)
      start = r_cyclic(n);
    else if (profile.size() == 2)
      start = r_pq(profile.parts()[0], profile.parts()[1]);
    else
      start = r_product(profile);
    break;
  }
  default:
    start = (n - 1) / 2 + 1;
  }
  return std::min(start, n - 2);
}

RadiusResult radius_auto(const GroupCode &code, const SolverOptions &options) {
  const int n = code.degree();
  const auto start = Clock::now();
  SearchStats total;
  if (!options.force_bruteforce && n >= 3) {
    int rtilde = std::min(options.start_rtilde.value_or(default_start_rtilde(code)), n - 2);
    while (2 * rtilde > n - 3) {
      auto result = radius_restricted(code, rtilde, options);
      total.candidates += result.stats.candidates;
      ++total.attempts;
      if (result.status == RadiusStatus::exact_restricted) {
        total.wall_seconds = seconds_since(start);
        result.stats = total;
        return result;
      }
      --rtilde;
    }
  }
  auto result = radius_bruteforce(code, options);
  total.candidates += result.stats.candidates;
  ++total.attempts;
  total.wall_seconds = seconds_since(start);
  result.stats = total;
  return result;
}

RadiusResult radius_from_formulas(const GroupCode &code) {
  const auto &d = code.descriptor();
  const int n = code.degree();
  RadiusResult result;
  result.status = RadiusStatus::formula;
  switch (d.kind()) {
  case CodeKind::cyclic:
    result.value = r_cyclic(n);
    return result;
  case CodeKind::product: {
    const auto &profile = d.profile();
    if (profile.size() == 1)
      result.value = r_cyclic(n);
    else if (profile.size() == 2)
      result.value = r_pq(profile.parts()[0], profile.parts()[1]);
    else
      result.value = r_product(profile);
    return result;
  }
  case CodeKind::dihedral: {
    const auto bounds = dn_bounds(n);
    if (bounds.exact) {
      result.value = *bounds.exact;
    } else {
      result.value = bounds.lower;
      result.status = RadiusStatus::bound_only;
    }
    return result;
  }
  default:
    throw InfeasibleError("no closed form for " + d.to_string());
  }
}

std::vector<Permutation> normalizer(const GroupCode &code, const ExtremaOptions &options) {
  const int n = code.degree();
  check_extrema_cap(n, options);
  const auto key = element_key(code);
  std::vector<Permutation> out;
  std::vector<int> h(static_cast<std::size_t>(n));
  std::iota(h.begin(), h.end(), 1);
  do {
    Permutation pi(h);
    if (element_key(relabel(code, pi)) == key)
      out.push_back(std::move(pi));
  } while (std::next_permutation(h.begin(), h.end()));
  return out;
}

RelabelExtrema relabel_extrema(const GroupCode &code, const ExtremaOptions &options) {
  const int n = code.degree();
  check_extrema_cap(n, options);
  const auto base_key = element_key(code);
  std::map<std::vector<int>, int> solved; // code key -> radius
  RelabelExtrema out{n, code.descriptor(), -1, n, Permutation::identity(n), Permutation::identity(n)};

  std::vector<int> h(static_cast<std::size_t>(n));
  std::iota(h.begin(), h.end(), 1);
  do {
    Permutation pi(h);
    const GroupCode relabeled = relabel(code, pi);
    auto key = element_key(relabeled);
    if (key == base_key)
      ++out.normalizer_order;
    int radius;
    auto it = solved.find(key);
    if (options.quotient && it != solved.end()) {
      radius = it->second;
    } else {
      radius = radius_bruteforce(relabeled, options.solver).value;
      ++out.conjugators_solved;
      solved.emplace(std::move(key), radius);
    }
    if (radius > out.lmax) {
      out.lmax = radius;
      out.argmax = pi;
    }
    if (radius < out.lmin) {
      out.lmin = radius;
      out.argmin = pi;
    }
  } while (std::next_permutation(h.begin(), h.end()));
  out.distinct_codes = solved.size();
  return out;
}

Permutation ranked_restriction(const Permutation &pi, int p) {
  if (p < 1 || p > pi.degree())
    throw ValidationError("ranked_restriction: p out of range");
  std::vector<int> head(pi.images().begin(), pi.images().begin() + p);
  std::vector<int> sorted = head;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranks;
  for (int v : head)
    ranks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return Permutation(std::move(ranks));
}

Permutation lift_ranked_witness(const Permutation &pi, int p, const Permutation &f_bar) {
  if (f_bar.degree() != p)
    throw ValidationError("lift_ranked_witness: witness degree must be p");
  std::vector<int> h_sorted(pi.images().begin(), pi.images().begin() + p);
  std::sort(h_sorted.begin(), h_sorted.end());
  const Permutation pi_bar = ranked_restriction(pi, p);
  PartialPlacement placement(pi.degree());
  for (int i = 1; i <= p; ++i)
    placement.assign(pi(i), h_sorted[static_cast<std::size_t>(f_bar(pi_bar(i)) - 1)]);
  return placement.complete();
}

LminReductionReport lmin_reduction_check(int p, int q, const ExtremaOptions &options) {
  if (q < 1 || p < q)
    throw ValidationError("lmin_reduction_check: requires p >= q >= 1");
  const int n = p + q;
  check_extrema_cap(n, options);
  const GroupCode gpq = make_product(FactorProfile({p, q}));
  const GroupCode gp = make_cyclic(p);

  LminReductionReport report{p, q, 0, 0, false, true, 0};
  report.lmin_pq = relabel_extrema(gpq, options).lmin;
  report.lmin_p = relabel_extrema(gp, options).lmin;
  report.inequality_holds = report.lmin_pq >= report.lmin_p;

  // witnesses for G_p^{pi_bar}; d(f_bar, G_p^{pi_bar}) = r(G_p^{pi_bar}) >= lmin_p
  std::map<Permutation, Permutation> small_witness;
  std::vector<int> h(static_cast<std::size_t>(n));
  std::iota(h.begin(), h.end(), 1);
  do {
    const Permutation pi(h);
    const Permutation pi_bar = ranked_restriction(pi, p);
    auto it = small_witness.find(pi_bar);
    if (it == small_witness.end()) {
      auto solved = radius_bruteforce(relabel(gp, pi_bar), options.solver);
      it = small_witness.emplace(pi_bar, *solved.witness).first;
    }
    const Permutation f0 = lift_ranked_witness(pi, p, it->second);
    if (!is_r_exposed(f0, relabel(gpq, pi), report.lmin_p - 1))
      report.construction_holds = false;
    ++report.conjugators_checked;
  } while (std::next_permutation(h.begin(), h.end()));
  return report;
}

} // namespace permcover
