#pragma once

#include <cstdint>
#include <optional>

#include "permcover/group_codes.hpp"

namespace permcover {

/// floor(sqrt(x)), exact for every 64-bit input.
std::uint64_t isqrt(std::uint64_t x);

/// Largest m >= 1 with m(m-1) <= n, i.e. floor((sqrt(4n+1)+1)/2).
std::int64_t largest_pronic_root(std::int64_t n);
/// Smallest k >= 0 with k(k+1) >= q, i.e. ceil((sqrt(4q+1)-1)/2).
std::int64_t least_pronic_root(std::int64_t q);

struct BoundsInterval {
  int lower;
  int upper;
  std::optional<int> exact;

  int width() const noexcept { return upper - lower; }
  bool contains(int v) const noexcept { return lower <= v && v <= upper; }
};

/// r(G_n) = n - floor((sqrt(4n+1)+1)/2).
int r_cyclic(int n);
/// L_max(G_n) = n - ceil((sqrt(4n+1)-1)/2).
int lmax_cyclic(int n);

/// Covering radius of the natural (p,q)-type group, p >= q >= 1.
int r_pq(int p, int q);
/// Largest covering radius over all relabelings of G_{p,q}, p >= q >= 1.
int lmax_pq(int p, int q);

/// Covering radius of the natural product group. Requires at least two factors:
/// the one-factor case is the cyclic group and is served by r_cyclic.
int r_product(const FactorProfile &profile);
int lmax_product(const FactorProfile &profile);

/// Upper bound r(G_n) and lower bound one below it; collapses to the exact
/// value n - m when n = m(m-1). n >= 3.
BoundsInterval dn_bounds(int n);

/// r(D_n) >= n - ceil((sqrt(4n+13)+1)/2), n >= 10. This is the radius the
/// dihedral witness builder refutes.
int dn_weak_lower(int n);

struct ClampedBound {
  int value;    // max(raw, 0)
  int raw;      // unclamped bound, possibly negative
  bool clamped; // raw < 0
};

/// L_min(G_n) >= n - ceil(sqrt(2n ln n + 2n)). Evaluated in long double; throws
/// BoundaryError if the ceiling is not stable one ulp either side or disagrees
/// with the double-precision evaluation.
ClampedBound lmin_cyclic_lower(int n);

} // namespace permcover
