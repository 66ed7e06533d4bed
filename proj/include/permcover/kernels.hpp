#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permcover/group_codes.hpp"

/// Search kernels behind the radius solver. Each kernel exists twice: a plain
/// serial reference that evaluates d(f, C) from scratch for every candidate,
/// and an OpenMP version (bitmask exposure tests, pruning, prefix sharding).
/// Both return identical results, witness included.
namespace permcover::kernels {

/// Row-major copy of a code's elements: `size` rows of `n` 1-based values.
struct CodeTable {
  int n = 0;
  int size = 0;
  std::vector<std::uint8_t> values;

  static CodeTable from(const GroupCode &code);
  std::span<const std::uint8_t> row(int g) const {
    return {values.data() + static_cast<std::size_t>(g) * static_cast<std::size_t>(n),
            static_cast<std::size_t>(n)};
  }
};

struct SearchOutcome {
  int value = -1;            // max over candidates of d(f, C)
  std::vector<int> witness;  // first maximizing candidate, one-line 1-based
  std::uint64_t candidates = 0;
};

/// Exhaustive max_f min_g d(f,g) over S_n. The witness is the
/// lexicographically smallest maximizer.
SearchOutcome covering_radius_serial(const CodeTable &code);
SearchOutcome covering_radius_omp(const CodeTable &code, int threads);

/// Order in which the restricted search places the window values:
/// 1, n, 2, n-1, ... (the rtilde window values, extremes first).
std::vector<int> placement_order(int n, int rtilde);

struct RestrictedOutcome {
  int value = -1;            // max over representatives of d(rep, C)
  bool exposed = false;      // some representative is rtilde-exposed
  std::vector<int> witness;  // first maximizing representative in enumeration order
  std::uint64_t representatives = 0;
};

/// One representative per injective placement of the window values
/// B = [1, n-rtilde-1], T = [rtilde+2, n]; remaining positions get the
/// remaining values in increasing order. Placements are enumerated
/// depth-first in placement_order, positions ascending. Requires
/// (n-3)/2 < rtilde <= n-2.
RestrictedOutcome restricted_serial(const CodeTable &code, int rtilde);
/// Same result. Once a representative reaches rtilde, unexposed
/// representatives are skipped and subtrees that cannot become exposed are
/// pruned; those cannot change the value or the first maximizer.
RestrictedOutcome restricted_omp(const CodeTable &code, int rtilde, int threads);

} // namespace permcover::kernels
