#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls the library's search kernels or closed forms.

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "permcover/group_codes.hpp"

namespace oracle {

using Perm = std::vector<int>; // one-line, 1-based values

inline Perm compose(const Perm &a, const Perm &b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return r;
}

inline Perm inverse(const Perm &a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[static_cast<std::size_t>(a[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

inline Perm identity(int n) {
  Perm r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    r[static_cast<std::size_t>(i)] = i + 1;
  return r;
}

inline int dist(const Perm &a, const Perm &b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline int dist_to(const Perm &f, const std::vector<Perm> &code) {
  int best = std::numeric_limits<int>::max();
  for (const auto &g : code)
    best = std::min(best, dist(f, g));
  return best;
}

inline std::set<Perm> closure(const std::vector<Perm> &gens) {
  std::set<Perm> seen{identity(static_cast<int>(gens.front().size()))};
  std::deque<Perm> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const Perm x = queue.front();
    queue.pop_front();
    for (const auto &g : gens) {
      Perm y = compose(g, x);
      if (seen.insert(y).second)
        queue.push_back(std::move(y));
    }
  }
  return seen;
}

/// Closure under composition, identity present, inverses present.
inline bool is_group(const std::vector<Perm> &elements) {
  const std::set<Perm> s(elements.begin(), elements.end());
  if (s.empty() || !s.count(identity(static_cast<int>(s.begin()->size()))))
    return false;
  for (const auto &a : s) {
    if (!s.count(inverse(a)))
      return false;
    for (const auto &b : s)
      if (!s.count(compose(a, b)))
        return false;
  }
  return true;
}

inline int mod_star(int m, int n) { return ((m - 1) % n + n) % n + 1; }

/// {A_i} u {B_i} with A_i(j) = (i - j) mod* n and B_i(j) = (n - i + 1 + j) mod* n.
inline std::set<Perm> dihedral_formula(int n) {
  std::set<Perm> out;
  for (int i = 1; i <= n; ++i) {
    Perm a, b;
    for (int j = 1; j <= n; ++j) {
      a.push_back(mod_star(i - j, n));
      b.push_back(mod_star(n - i + 1 + j, n));
    }
    out.insert(a);
    out.insert(b);
  }
  return out;
}

inline std::vector<Perm> dihedral_generators(int n) {
  Perm rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    rot[static_cast<std::size_t>(i - 1)] = i % n + 1;
    refl[static_cast<std::size_t>(i - 1)] = mod_star(n - i, n); // (i, n-i) pairs, n fixed
  }
  return {rot, refl};
}

/// Every combination of independent rotations of consecutive blocks.
inline std::set<Perm> product_rotations(const std::vector<int> &parts) {
  int n = 0;
  for (int p : parts)
    n += p;
  std::set<Perm> out;
  std::vector<int> shift(parts.size(), 0);
  while (true) {
    Perm f(static_cast<std::size_t>(n));
    int base = 0;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      for (int t = 0; t < parts[b]; ++t)
        f[static_cast<std::size_t>(base + t)] = base + (t + shift[b]) % parts[b] + 1;
      base += parts[b];
    }
    out.insert(f);
    std::size_t b = 0;
    while (b < parts.size() && ++shift[b] == parts[b])
      shift[b++] = 0;
    if (b == parts.size())
      break;
  }
  return out;
}

inline std::vector<Perm> elements(const permcover::GroupCode &code) {
  std::vector<Perm> out;
  for (const auto &g : code.elements())
    out.emplace_back(g.images().begin(), g.images().end());
  return out;
}

/// max over S_n of the distance to the code, by plain enumeration.
inline int radius_naive(const std::vector<Perm> &code) {
  Perm f = identity(static_cast<int>(code.front().size()));
  int best = 0;
  do
    best = std::max(best, dist_to(f, code));
  while (std::next_permutation(f.begin(), f.end()));
  return best;
}

inline Perm random_perm(int n, std::mt19937_64 &rng) {
  Perm f = identity(n);
  std::shuffle(f.begin(), f.end(), rng);
  return f;
}

// Formulas in their original floating form, 50 significant digits. A result
// within 1e-30 of an integer is snapped to it before floor/ceil, since these
// expressions land exactly on integers at pronic boundaries.
namespace hp {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real snap(const Real &x) {
  const Real r = boost::multiprecision::round(x);
  return boost::multiprecision::abs(x - r) < Real("1e-30") ? r : x;
}
inline long long floor_of(const Real &x) { return boost::multiprecision::floor(snap(x)).convert_to<long long>(); }
inline long long ceil_of(const Real &x) { return boost::multiprecision::ceil(snap(x)).convert_to<long long>(); }
inline Real root(long long x) { return boost::multiprecision::sqrt(Real(x)); }

inline long long r_cyclic(long long n) { return n - floor_of((root(4 * n + 1) + 1) / 2); }
inline long long lmax_cyclic(long long n) { return n - ceil_of((root(4 * n + 1) - 1) / 2); }
inline long long pq_gap(long long q) {
  const Real eighth = Real(1) / 8;
  const Real t = boost::multiprecision::sqrt(Real(q) + eighth) - boost::multiprecision::sqrt(Real(2)) / 2;
  return floor_of(t * t - eighth);
}
inline long long r_pq(long long p, long long q) { return p + pq_gap(q); }
inline long long lmax_pq(long long p, long long q) {
  return q <= 2 ? p : p + q - ceil_of((root(4 * q + 1) - 1) / 2);
}
inline long long r_product(long long n, long long pk) { return n - pk + pq_gap(pk); }
inline long long lmax_product(long long n, long long pk) {
  return pk >= 3 ? n - ceil_of((root(4 * pk + 1) - 1) / 2) : n - pk;
}
inline long long dn_weak_lower(long long n) { return n - ceil_of((root(4 * n + 13) + 1) / 2); }
inline long long lmin_cyclic_lower(long long n) {
  const Real x = 2 * Real(n) * boost::multiprecision::log(Real(n)) + 2 * Real(n);
  return n - boost::multiprecision::ceil(boost::multiprecision::sqrt(x)).convert_to<long long>();
}

} // namespace hp

} // namespace oracle
