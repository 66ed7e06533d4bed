#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "permcover/group_codes.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

enum class RadiusStatus {
  exact_bruteforce,
  exact_restricted,
  invalid_restricted, // restricted search fell below its rtilde; retry lower
  bound_only,         // a proven lower bound, not the exact radius
  formula,            // exact, from a closed form
};

std::string to_string(RadiusStatus status);
RadiusStatus parse_radius_status(const std::string &name);

struct SearchStats {
  std::uint64_t candidates = 0;
  double wall_seconds = 0.0;
  int attempts = 0;
};

struct RadiusResult {
  int value = 0;
  RadiusStatus status = RadiusStatus::bound_only;
  std::optional<Permutation> witness; // d(witness, C) == value when present
  std::optional<int> rtilde;
  SearchStats stats;

  bool exact() const noexcept {
    return status == RadiusStatus::exact_bruteforce || status == RadiusStatus::exact_restricted ||
           status == RadiusStatus::formula;
  }
};

enum class KernelMode { parallel, serial };

struct SolverOptions {
  int threads = 0;      // 0: OpenMP default
  int degree_cap = 9;   // brute force limit on n
  bool override_cap = false;
  KernelMode kernel = KernelMode::parallel;
  std::optional<int> start_rtilde; // radius_auto only
  bool force_bruteforce = false;   // radius_auto only
};

/// max_f d(f, C) over all of S_n.
RadiusResult radius_bruteforce(const GroupCode &code, const SolverOptions &options = {});

/// Search over one representative per placement of the window values for
/// `rtilde`. exact_restricted iff the returned value is >= rtilde; the
/// argument only uses the metric, so any code is accepted. Requires
/// (n-3)/2 < rtilde <= n-2.
RadiusResult radius_restricted(const GroupCode &code, int rtilde, const SolverOptions &options = {});

/// Starting rtilde for radius_auto: the best known lower bound for the family.
int default_start_rtilde(const GroupCode &code);

/// Restricted search from the family's lower bound, stepping rtilde down on
/// invalid results and falling back to brute force once the windows overlap.
/// Always exact.
RadiusResult radius_auto(const GroupCode &code, const SolverOptions &options = {});

/// Closed-form value where one exists (status formula), or the proven lower
/// bound for D_n (status bound_only). Throws InfeasibleError otherwise.
RadiusResult radius_from_formulas(const GroupCode &code);

struct ExtremaOptions {
  SolverOptions solver;
  int degree_cap = 7;
  bool override_cap = false;
  /// Solve one conjugator per distinct relabeled code (a coset of the
  /// normalizer) instead of every conjugator.
  bool quotient = true;
};

struct RelabelExtrema {
  int n;
  CodeDescriptor base;
  int lmax;
  int lmin;
  Permutation argmax; // first conjugator (lexicographic) attaining lmax
  Permutation argmin;
  std::uint64_t conjugators_solved = 0;
  std::uint64_t distinct_codes = 0;
  std::uint64_t normalizer_order = 0;
};

/// Max and min covering radius over all relabelings by conjugation.
RelabelExtrema relabel_extrema(const GroupCode &code, const ExtremaOptions &options = {});

/// {h : h C h^-1 = C} by exhaustive scan; n must be within the extrema cap.
std::vector<Permutation> normalizer(const GroupCode &code, const ExtremaOptions &options = {});

/// Rank of pi's first p images among themselves: phi_H(pi|[p]) in S_p.
Permutation ranked_restriction(const Permutation &pi, int p);

/// Lifts a witness f_bar for G_p^{ranked_restriction(pi,p)} to S_{p+q}:
/// f0(pi(i)) = phi_H^-1(f_bar(pi_bar(i))) on H = pi([p]); the rest by the
/// deterministic completion.
Permutation lift_ranked_witness(const Permutation &pi, int p, const Permutation &f_bar);

struct LminReductionReport {
  int p;
  int q;
  int lmin_pq;
  int lmin_p;
  bool inequality_holds;
  /// For every conjugator the lifted witness is (lmin_p - 1)-exposed.
  bool construction_holds;
  std::uint64_t conjugators_checked = 0;

  bool holds() const noexcept { return inequality_holds && construction_holds; }
};

/// Exhaustive check of L_min(G_{p,q}) >= L_min(G_p) and of the ranking lift.
LminReductionReport lmin_reduction_check(int p, int q, const ExtremaOptions &options = {});

} // namespace permcover
