#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permcover/group_codes.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

enum class WitnessFamily { pq, lmax, dn, dn_refined };

std::string to_string(WitnessFamily family);
WitnessFamily parse_witness_family(const std::string &name);

/// The schedule a construction used: named (index, location) sequences such as
/// lambda(i), plus the scalar parameters (k, I, lambda', ...).
struct LambdaTrace {
  using Sequence = std::vector<std::pair<int, long long>>;

  std::string regime;
  std::map<std::string, Sequence> sequences;
  std::map<std::string, long long> params;
};

struct ExposureRecord {
  Permutation element;
  int position; // first position where |f(i) - g(i)| > r0
  int gap;
};

struct VerificationReport {
  bool verified = false;
  int distance = 0; // d(completed, code)
  std::vector<ExposureRecord> exposures;
  /// First codeword (in code order) within r0 of the witness, when not verified.
  std::optional<Permutation> unexposed_element;
};

/// An explicit permutation certifying r(code) > r0.
struct WitnessBundle {
  WitnessFamily family;
  std::map<std::string, int> family_params;
  CodeDescriptor code; // the code the witness is checked against
  int r0;
  std::optional<Permutation> conjugator;
  PartialPlacement placement;
  Permutation completed;
  LambdaTrace trace;
  VerificationReport report;
};

/// True iff every codeword is more than r0 away from the completed permutation.
/// Throws ValidationError if the completion does not extend the placement or
/// degrees disagree.
VerificationReport verify_witness(const WitnessBundle &bundle);

/// r0 = r_pq(p,q) - 1 against G_{p,q}. For q < 3 the trivial witness
/// f(1)=p+q, f(p+q)=1 at r0 = p-1.
WitnessBundle witness_pq(int p, int q);

/// r0 = lmax_pq(p,q) - 1 against a relabeling of G_{p,q}; p >= q >= 3.
WitnessBundle witness_lmax(int p, int q);

/// r0 = dn_weak_lower(n) - 1 against D_n; n >= 10.
WitnessBundle witness_dn(int n);

/// r0 = n - m - 1 against D_n for n in {m(m-1)-2, m(m-1)-1, m(m-1)}, m > 5.
/// Throws InfeasibleError when m <= 5 (those radii come from search).
WitnessBundle witness_dn_refined(int n);

} // namespace permcover
