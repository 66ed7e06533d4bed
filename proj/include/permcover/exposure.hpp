#pragma once

#include <vector>

#include "permcover/group_codes.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

/// Bottom values B = [1, n-r-1] and top values T = [r+2, n]: the only values
/// that can sit more than r away from anything.
struct WindowSets {
  int n;
  int r;

  int bottom_last() const noexcept { return n - r - 1; } // B = [1, bottom_last]
  int top_first() const noexcept { return r + 2; }       // T = [top_first, n]
  bool in_bottom(int v) const noexcept { return v >= 1 && v <= bottom_last(); }
  bool in_top(int v) const noexcept { return v >= top_first() && v <= n; }
  bool in_windows(int v) const noexcept { return in_bottom(v) || in_top(v); }
  bool disjoint() const noexcept { return bottom_last() < top_first(); }
  bool empty() const noexcept { return bottom_last() < 1; }
  std::vector<int> bottom() const;
  std::vector<int> top() const;
  /// B then T, ascending.
  std::vector<int> values() const;
};

/// Requires 0 <= r <= n-1.
WindowSets window_sets(int n, int r);

/// Anchor-labelled record of the codewords that r-expose the mapping i -> j.
struct ASet {
  int position;
  int target;
  int anchor;
  std::vector<int> members; // sorted {g^-1(anchor)}
};

/// Scans the code. The anchor is the first point (under the conjugator) of the
/// block containing `position`; codes without block structure use a single
/// block anchored at the conjugator's image of 1.
ASet aset(const GroupCode &code, int position, int target, int r);

/// f is r-exposed iff for some block the union of its A-sets is the whole block.
/// Requires a product or relabeled-product code (any number of factors).
bool exposure_by_asets(const Permutation &f, const GroupCode &code, int r);

/// Upper bound on |A_{i->j}| for a (p,q)-type code. Exact (position aware) for
/// the natural group when p <= r <= p+q; otherwise the relabeling-invariant
/// bound, valid only for (p+q)/2 - 1 < r < p+q.
int counting_bound(const GroupCode &code, int position, int target, int r);

struct BlockCoverage {
  Block block;
  std::vector<ASet> asets; // one per location, in location order
  std::vector<int> covered_members;
  bool covered;
};

struct ExposureExplanation {
  int r;
  std::vector<BlockCoverage> blocks;
  bool exposed_by_asets;
  bool exposed_direct;
  int distance;
};

/// The full A-set table behind exposure_by_asets, plus the direct check.
ExposureExplanation explain_exposure(const Permutation &f, const GroupCode &code, int r);

} // namespace permcover
