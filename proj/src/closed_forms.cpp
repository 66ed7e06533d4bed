#include "permcover/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "permcover/error.hpp"

namespace permcover {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  // the float estimate can be off by one in either direction near 2^64
  while (r > 0 && (r > x / r))
    --r;
  while ((r + 1) <= x / (r + 1))
    ++r;
  return r;
}

std::int64_t largest_pronic_root(std::int64_t n) {
  if (n < 0)
    throw ValidationError("largest_pronic_root: n must be nonnegative");
  // m(m-1) <= n  <=>  (2m-1)^2 <= 4n+1
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * n + 1)));
  return (s + 1) / 2;
}

std::int64_t least_pronic_root(std::int64_t q) {
  if (q <= 0)
    return 0;
  // k(k+1) >= q  <=>  (2k+1)^2 >= 4q+1
  const auto target = static_cast<std::uint64_t>(4 * q + 1);
  auto c = isqrt(target);
  if (c * c < target)
    ++c; // ceil sqrt
  return static_cast<std::int64_t>(c / 2); // smallest k with 2k+1 >= c
}

namespace {

void require_pq(int p, int q, const char *what) {
  if (q < 1 || p < q)
    throw ValidationError(std::string(what) + ": requires p >= q >= 1 (got p=" +
                          std::to_string(p) + ", q=" + std::to_string(q) + ")");
}

} // namespace

int r_cyclic(int n) {
  if (n < 1)
    throw ValidationError("r_cyclic: n must be >= 1");
  return n - static_cast<int>(largest_pronic_root(n));
}

int lmax_cyclic(int n) {
  if (n < 1)
    throw ValidationError("lmax_cyclic: n must be >= 1");
  return n - static_cast<int>(least_pronic_root(n));
}

int r_pq(int p, int q) {
  require_pq(p, q, "r_pq");
  // p + floor((sqrt(q+1/8) - sqrt(2)/2)^2 - 1/8) = p + q - ceil((sqrt(8q+1)-1)/2)
  return p + q - static_cast<int>(least_pronic_root(2LL * q));
}

int lmax_pq(int p, int q) {
  require_pq(p, q, "lmax_pq");
  if (q <= 2)
    return p;
  return p + q - static_cast<int>(least_pronic_root(q));
}

int r_product(const FactorProfile &profile) {
  if (profile.size() < 2)
    throw ValidationError("r_product: needs at least two factors (use r_cyclic for one)");
  return profile.degree() - static_cast<int>(least_pronic_root(2LL * profile.smallest()));
}

int lmax_product(const FactorProfile &profile) {
  const int pk = profile.smallest();
  if (pk < 3)
    return profile.degree() - pk;
  return profile.degree() - static_cast<int>(least_pronic_root(pk));
}

BoundsInterval dn_bounds(int n) {
  if (n < 3)
    throw ValidationError("dn_bounds: n must be >= 3");
  const auto m = largest_pronic_root(n);
  const int upper = n - static_cast<int>(m);
  if (m * (m - 1) == n)
    return {upper, upper, upper};
  return {upper - 1, upper, std::nullopt};
}

int dn_weak_lower(int n) {
  if (n < 10)
    throw ValidationError("dn_weak_lower: n must be >= 10");
  // smallest k with k(k-1) >= n+3
  return n - static_cast<int>(least_pronic_root(static_cast<std::int64_t>(n) + 3) + 1);
}

ClampedBound lmin_cyclic_lower(int n) {
  if (n < 1)
    throw ValidationError("lmin_cyclic_lower: n must be >= 1");
  const long double nl = n;
  const long double x = std::sqrt(2.0L * nl * std::log(nl) + 2.0L * nl);
  const long double lo = std::ceil(std::nextafter(x, -std::numeric_limits<long double>::infinity()));
  const long double hi = std::ceil(std::nextafter(x, std::numeric_limits<long double>::infinity()));
  const double nd = n;
  const double xd = std::sqrt(2.0 * nd * std::log(nd) + 2.0 * nd);
  if (lo != hi || static_cast<long double>(std::ceil(xd)) != std::ceil(x))
    throw BoundaryError("lmin_cyclic_lower: ceiling unstable at n=" + std::to_string(n));
  const int raw = n - static_cast<int>(std::ceil(x));
  return {raw < 0 ? 0 : raw, raw, raw < 0};
}

} // namespace permcover
