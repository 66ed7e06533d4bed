#include "permcover/witnesses.hpp"

#include <cstdlib>
#include <sstream>

#include "permcover/closed_forms.hpp"
#include "permcover/error.hpp"

namespace permcover {

namespace {

long long binom2(long long t) { return t * (t - 1) / 2; }

WitnessBundle finish(WitnessFamily family, std::map<std::string, int> params, CodeDescriptor code,
                     int r0, std::optional<Permutation> conjugator, PartialPlacement placement,
                     LambdaTrace trace) {
  Permutation completed = placement.complete();
  WitnessBundle bundle{family,          std::move(params),    std::move(code),
                       r0,              std::move(conjugator), std::move(placement),
                       std::move(completed), std::move(trace), {}};
  bundle.report = verify_witness(bundle);
  if (!bundle.report.verified) {
    std::ostringstream os;
    os << to_string(family) << " witness for " << bundle.code.to_string() << " is not " << r0
       << "-exposed: codeword " << bundle.report.unexposed_element->to_string()
       << " is within distance " << bundle.report.distance << " of " << bundle.completed;
    throw VerificationError(os.str());
  }
  return bundle;
}

} // namespace

std::string to_string(WitnessFamily family) {
  switch (family) {
  case WitnessFamily::pq:
    return "pq";
  case WitnessFamily::lmax:
    return "lmax";
  case WitnessFamily::dn:
    return "dn";
  case WitnessFamily::dn_refined:
    return "dn_refined";
  }
  return "unknown";
}

WitnessFamily parse_witness_family(const std::string &name) {
  if (name == "pq")
    return WitnessFamily::pq;
  if (name == "lmax")
    return WitnessFamily::lmax;
  if (name == "dn")
    return WitnessFamily::dn;
  if (name == "dn_refined")
    return WitnessFamily::dn_refined;
  throw ValidationError("unknown witness family '" + name + "'");
}

VerificationReport verify_witness(const WitnessBundle &bundle) {
  if (bundle.completed.degree() != bundle.code.degree() ||
      bundle.placement.degree() != bundle.code.degree())
    throw ValidationError("witness: degree mismatch between code, placement and completion");
  if (!bundle.placement.extended_by(bundle.completed))
    throw ValidationError("witness: completed permutation does not extend the placement");
  if (bundle.r0 < 0)
    throw ValidationError("witness: r0 must be nonnegative");

  const GroupCode code = build_code(bundle.code);
  const Permutation &f = bundle.completed;
  VerificationReport report;
  report.verified = true;
  report.distance = distance_to_code(f, code);
  for (const auto &g : code.elements()) {
    int position = 0;
    for (int i = 1; i <= f.degree(); ++i)
      if (std::abs(f(i) - g(i)) > bundle.r0) {
        position = i;
        break;
      }
    if (position == 0) {
      report.verified = false;
      if (!report.unexposed_element)
        report.unexposed_element = g;
      continue;
    }
    report.exposures.push_back({g, position, std::abs(f(position) - g(position))});
  }
  return report;
}

WitnessBundle witness_pq(int p, int q) {
  if (q < 1 || p < q)
    throw ValidationError("witness_pq: requires p >= q >= 1");
  const int n = p + q;
  PartialPlacement placement(n);
  LambdaTrace trace;
  int r0;
  if (q < 3) {
    // g(1) <= p and g(p+q) >= p+1 for every g
    r0 = p - 1;
    placement.assign(1, n);
    placement.assign(n, 1);
    trace.regime = "small-q";
  } else {
    r0 = r_pq(p, q) - 1;
    const long long k = n - r0;
    std::vector<long long> lambda(static_cast<std::size_t>(k + 1), 0);
    lambda[1] = q;
    for (long long i = 2; i <= k; ++i)
      lambda[static_cast<std::size_t>(i)] = k * (i - 1) - binom2(i);
    long long I = 2;
    for (long long i = 2; i <= k; ++i)
      if (lambda[static_cast<std::size_t>(i)] < q)
        I = i;
    for (long long i = 1; i <= I; ++i)
      placement.assign(p + static_cast<int>(lambda[static_cast<std::size_t>(i)]), static_cast<int>(i));
    trace.regime = "lambda";
    for (long long i = 1; i <= k; ++i)
      trace.sequences["lambda"].emplace_back(static_cast<int>(i), lambda[static_cast<std::size_t>(i)]);
    trace.params = {{"k", k}, {"I", I}};
  }
  return finish(WitnessFamily::pq, {{"p", p}, {"q", q}},
                CodeDescriptor::product(FactorProfile({p, q})), r0, std::nullopt,
                std::move(placement), std::move(trace));
}

WitnessBundle witness_lmax(int p, int q) {
  if (q < 3 || p < q)
    throw ValidationError("witness_lmax: requires p >= q >= 3");
  const int n = p + q;
  const int r0 = lmax_pq(p, q) - 1;
  PartialPlacement pi_part(n);
  PartialPlacement f0(n);
  LambdaTrace trace;
  const long long k = least_pronic_root(q);
  trace.params["k"] = k;

  if (q <= 5) {
    trace.regime = "small-q";
    pi_part.assign(p + 1, 1);
    pi_part.assign(p + 2, 2);
    for (int i = 3; i <= q; ++i)
      pi_part.assign(p + i, p + i);
    if (q == 3) {
      f0.assign(1, p + 3);
      f0.assign(2, p + 2);
    } else if (q == 4) {
      f0.assign(1, 1);
      f0.assign(2, p + 4);
      f0.assign(p + 3, 2);
    } else {
      f0.assign(1, 1);
      f0.assign(2, p + 5);
      f0.assign(p + 3, 2);
      f0.assign(p + 5, p + 4);
    }
  } else if (k * (k + 1) == q) {
    trace.regime = "pronic";
    pi_part.assign(p + 1, 2);
    pi_part.assign(p + 2, 1);
    for (int i = p + 3; i <= p + k; ++i)
      pi_part.assign(i, i - p);
    for (int i = p + static_cast<int>(k) + 1; i <= n; ++i)
      pi_part.assign(i, i);
    // R = [k] u [p+k+1, p+q]
    const auto in_r = [&](long long i) { return (i >= 1 && i <= k) || (i > p + k && i <= n); };
    f0.assign(1, 1);
    f0.assign(2, n);
    for (long long i = 1; i <= n; ++i)
      if (in_r(i) && (i - 3) % p == 0) {
        f0.assign(static_cast<int>(i), static_cast<int>(n + 1 - k));
        trace.params["residue3_position"] = i;
      }
    for (long long l = 0; l <= k - 2; ++l) {
      const long long i = binom2(l + 1) + p + 2 + k;
      f0.assign(static_cast<int>(i), static_cast<int>(k - l));
      trace.sequences["small_value_locations"].emplace_back(static_cast<int>(l), i);
    }
    for (long long l = 1; l <= k - 2; ++l) {
      const long long i = n - k + 2 - binom2(l + 1);
      f0.assign(static_cast<int>(i), static_cast<int>(n - k + 1 + l));
      trace.sequences["large_value_locations"].emplace_back(static_cast<int>(l), i);
    }
  } else {
    trace.regime = "non-pronic";
    for (int i = p + 1; i <= p + k; ++i)
      pi_part.assign(i, i - p);
    for (int i = p + static_cast<int>(k) + 1; i <= n; ++i)
      pi_part.assign(i, i);
    long long I = 1;
    while (!(p + k * k + k - 1 - binom2(I + 1) < n))
      ++I;
    trace.params["I"] = I;
    const Permutation pi = pi_part.complete();
    for (long long l = 1; l <= k; ++l) {
      const long long at = p + binom2(l + 1);
      f0.assign(pi(static_cast<int>(at)), static_cast<int>(n - k + l));
      trace.sequences["large_value_slots"].emplace_back(static_cast<int>(l), at);
    }
    for (long long l = I; l <= k; ++l) {
      const long long at = p + k * k + k - 1 - binom2(l + 1);
      f0.assign(pi(static_cast<int>(at)), static_cast<int>(k - l + 1));
      trace.sequences["small_value_slots"].emplace_back(static_cast<int>(l), at);
    }
  }

  Permutation pi = pi_part.complete();
  auto code = CodeDescriptor::relabeled(CodeDescriptor::product(FactorProfile({p, q})), pi);
  return finish(WitnessFamily::lmax, {{"p", p}, {"q", q}}, std::move(code), r0, std::move(pi),
                std::move(f0), std::move(trace));
}

WitnessBundle witness_dn(int n) {
  if (n < 10)
    throw ValidationError("witness_dn: requires n >= 10");
  const int r0 = dn_weak_lower(n) - 1;
  const long long k = n - r0 - 1;
  const long long dk = binom2(k);
  std::map<long long, long long> lambda;
  for (long long i = 1; i <= k - 1; ++i)
    lambda[i] = dk - binom2(k - i + 1) + 1;
  for (long long i = n - k + 2; i <= n; ++i)
    lambda[i] = dk + binom2(i - n + k) - 2;

  long long I = n - k + 2;
  for (long long i = n - k + 2; i <= n; ++i)
    if (lambda[i] <= n)
      I = i;
  if (I >= n)
    throw VerificationError("witness_dn: lambda schedule never exceeds n");

  PartialPlacement placement(n);
  LambdaTrace trace;
  trace.regime = "lambda";
  for (const auto &[i, pos] : lambda) {
    trace.sequences["lambda"].emplace_back(static_cast<int>(i), pos);
    if (i <= k - 1 || i <= I)
      placement.assign(static_cast<int>(pos), static_cast<int>(i));
  }
  // lambda(I+1) wraps around; if it lands on an occupied location it is
  // bumped by one.
  long long lambda_prime = mod_star(lambda[I + 1], n);
  long long repair_case = 1;
  if (placement.has_position(static_cast<int>(lambda_prime))) {
    repair_case = 2;
    lambda_prime = mod_star(lambda[I + 1] + 1, n);
  }
  placement.assign(static_cast<int>(lambda_prime), static_cast<int>(I + 1));
  trace.params = {{"k", k}, {"d_k", dk}, {"I", I}, {"lambda_prime", lambda_prime},
                  {"repair_case", repair_case}};
  return finish(WitnessFamily::dn, {{"n", n}}, CodeDescriptor::dihedral(n), r0, std::nullopt,
                std::move(placement), std::move(trace));
}

WitnessBundle witness_dn_refined(int n) {
  if (n < 4)
    throw ValidationError("witness_dn_refined: n must be m(m-1)-2, m(m-1)-1 or m(m-1) with m >= 3");
  const long long m = largest_pronic_root(static_cast<long long>(n) + 2);
  const long long pronic = m * (m - 1);
  const long long offset = n - pronic; // -2, -1 or 0
  if (offset < -2 || offset > 0)
    throw ValidationError("witness_dn_refined: n=" + std::to_string(n) +
                          " is not m(m-1)-2, m(m-1)-1 or m(m-1)");
  if (m <= 5)
    throw InfeasibleError("witness_dn_refined: m=" + std::to_string(m) +
                          " <= 5; r(D_" + std::to_string(n) + ") comes from exhaustive search");

  const long long dm = binom2(m);
  std::map<long long, long long> lambda;
  LambdaTrace trace;
  lambda[1] = n - 1;
  if (offset == -2) {
    trace.regime = "m(m-1)-2";
    for (long long i = 2; i <= m - 1; ++i)
      lambda[i] = dm - binom2(m - i + 1) + 1;
    lambda[m] = dm - binom2(m - 1);
    for (long long i = n - m + 2; i <= n; ++i)
      lambda[i] = dm + binom2(i - n + m) - 2;
  } else {
    trace.regime = offset == -1 ? "m(m-1)-1" : "m(m-1)";
    for (long long i = 2; i <= m - 2; ++i)
      lambda[i] = dm - binom2(m - i + 1);
    lambda[m - 1] = dm - binom2(2) + 1;
    lambda[m] = dm - binom2(3) + 1;
    lambda[n - m + 1] = dm + binom2(3) - 2;
    lambda[n - m + 2] = dm + binom2(2) - 2;
    const long long last_generic = offset == -1 ? n : n - 2;
    for (long long i = n - m + 3; i <= last_generic; ++i)
      lambda[i] = dm + binom2(i - n + m) - 1;
    if (offset == 0) {
      lambda[n - 1] = dm + binom2(m - 1);
      lambda[n] = n;
    }
  }

  PartialPlacement placement(n);
  for (const auto &[i, pos] : lambda) {
    placement.assign(static_cast<int>(pos), static_cast<int>(i));
    trace.sequences["lambda"].emplace_back(static_cast<int>(i), pos);
  }
  trace.params = {{"m", m}, {"d_m", dm}};
  return finish(WitnessFamily::dn_refined, {{"n", n}}, CodeDescriptor::dihedral(n),
                static_cast<int>(n - m - 1), std::nullopt, std::move(placement), std::move(trace));
}

} // namespace permcover
