#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>

#include <omp.h>

#include "permcover/error.hpp"
#include "permcover/kernels.hpp"

namespace permcover::kernels {

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

// True iff every codeword is more than `bound` away from f.
bool all_farther_than(const CodeTable &code, const int *f, int bound) {
  for (int g = 0; g < code.size; ++g) {
    const std::uint8_t *row = code.values.data() + static_cast<std::size_t>(g) * static_cast<std::size_t>(code.n);
    bool far = false;
    for (int i = 0; i < code.n; ++i)
      if (std::abs(f[i] - static_cast<int>(row[i])) > bound) {
        far = true;
        break;
      }
    if (!far)
      return false;
  }
  return true;
}

int exact_distance(const CodeTable &code, const int *f) {
  int best = std::numeric_limits<int>::max();
  for (int g = 0; g < code.size; ++g) {
    const std::uint8_t *row = code.values.data() + static_cast<std::size_t>(g) * static_cast<std::size_t>(code.n);
    int d = 0;
    for (int i = 0; i < code.n; ++i)
      d = std::max(d, std::abs(f[i] - static_cast<int>(row[i])));
    best = std::min(best, d);
  }
  return best;
}

struct ShardResult {
  int value = -1;
  std::vector<int> witness;
  std::uint64_t candidates = 0;
  bool exposed = false;
};

template <int W> struct Mask {
  std::array<std::uint64_t, W> w{};

  Mask operator|(const Mask &o) const {
    Mask r;
    for (int k = 0; k < W; ++k)
      r.w[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k)] | o.w[static_cast<std::size_t>(k)];
    return r;
  }
  Mask &operator|=(const Mask &o) {
    for (int k = 0; k < W; ++k)
      w[static_cast<std::size_t>(k)] |= o.w[static_cast<std::size_t>(k)];
    return *this;
  }
  bool operator==(const Mask &o) const { return w == o.w; }
  void set(int bit) { w[static_cast<std::size_t>(bit / 64)] |= std::uint64_t{1} << (bit % 64); }
};

// Phases of the restricted search, tried in order:
//   exposed: representatives with d > rtilde; the mask test is exact because
//            only window values can differ from a codeword by more than rtilde.
//   attain:  no representative is exposed; find the first one with
//            d >= rtilde (threshold rtilde - 1, middle values included).
//   full:    neither exists (rtilde too large); plain max over every
//            representative.
enum class Phase { exposed, attain, full };

template <int W> struct RestrictedSetup {
  const CodeTable &code;
  int rtilde;
  int threshold;
  std::vector<int> order;
  std::vector<int> middle;
  std::vector<Mask<W>> exposes; // [position * (n+1) + value]: codewords exposed by that mapping
  std::vector<Mask<W>> middle_exposes; // [position]: the middle values placed there, if any
  // [depth * n + position]: every codeword the values from `depth` on (plus,
  // in the attain phase, any middle value) could expose from that position
  std::vector<Mask<W>> reach_suffix;
  Mask<W> full;

  RestrictedSetup(const CodeTable &c, int r, Phase phase)
      : code(c), rtilde(r), threshold(phase == Phase::attain ? r - 1 : r), order(placement_order(c.n, r)) {
    const int n = c.n;
    for (int v = n - r; v <= r + 1; ++v)
      middle.push_back(v);
    exposes.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1), Mask<W>{});
    for (int g = 0; g < c.size; ++g) {
      full.set(g);
      const auto row = c.row(g);
      for (int i = 0; i < n; ++i)
        for (int v = 1; v <= n; ++v)
          if (std::abs(v - static_cast<int>(row[static_cast<std::size_t>(i)])) > threshold)
            exposes[static_cast<std::size_t>(i * (n + 1) + v)].set(g);
    }
    middle_exposes.assign(static_cast<std::size_t>(n), Mask<W>{});
    if (phase == Phase::attain)
      for (int i = 0; i < n; ++i)
        for (int v : middle)
          middle_exposes[static_cast<std::size_t>(i)] |= at(i, v);
    const int depths = static_cast<int>(order.size());
    reach_suffix.assign(static_cast<std::size_t>(depths + 1) * static_cast<std::size_t>(n), Mask<W>{});
    for (int i = 0; i < n; ++i)
      reach_suffix[static_cast<std::size_t>(depths * n + i)] = middle_exposes[static_cast<std::size_t>(i)];
    for (int d = depths - 1; d >= 0; --d)
      for (int i = 0; i < n; ++i)
        reach_suffix[static_cast<std::size_t>(d * n + i)] =
            reach_suffix[static_cast<std::size_t>((d + 1) * n + i)] | at(i, order[static_cast<std::size_t>(d)]);
  }

  const Mask<W> &at(int position, int value) const {
    return exposes[static_cast<std::size_t>(position * (code.n + 1) + value)];
  }
};

template <int W> struct RestrictedShard {
  const RestrictedSetup<W> &setup;
  const Phase phase;
  const int n;
  const int depth_count;
  std::uint64_t used = 0;
  std::array<int, 64> position_of{};
  std::array<int, 64> rep{};
  ShardResult result;
  bool done = false;
  // attain phase: a shard ordered before this one already has a hit
  const std::atomic<int> *first_hit = nullptr;
  int index = 0;

  RestrictedShard(const RestrictedSetup<W> &s, Phase p)
      : setup(s), phase(p), n(s.code.n), depth_count(static_cast<int>(s.order.size())) {}

  // Could the values still to be placed (from `depth` on) expose every
  // codeword that `mask` misses?
  bool can_cover(int depth, const Mask<W> &mask) const {
    Mask<W> reach = mask;
    const Mask<W> *row = setup.reach_suffix.data() + static_cast<std::size_t>(depth * n);
    for (int i = 0; i < n; ++i)
      if (!((used >> i) & 1U))
        reach |= row[i];
    return reach == setup.full;
  }

  void build_rep() {
    rep.fill(0);
    for (int t = 0; t < depth_count; ++t)
      rep[static_cast<std::size_t>(position_of[static_cast<std::size_t>(t)])] = setup.order[static_cast<std::size_t>(t)];
    std::size_t next = 0;
    for (int i = 0; i < n; ++i)
      if (rep[static_cast<std::size_t>(i)] == 0)
        rep[static_cast<std::size_t>(i)] = setup.middle[next++];
  }

  void record() { result.witness.assign(rep.begin(), rep.begin() + n); }

  void leaf_exposed(const Mask<W> &mask) {
    if (!(mask == setup.full))
      return;
    int d = std::numeric_limits<int>::max();
    const auto &code = setup.code;
    for (int g = 0; g < code.size && d > result.value; ++g) {
      const auto row = code.row(g);
      int dg = 0;
      for (int t = 0; t < depth_count; ++t)
        dg = std::max(dg, std::abs(setup.order[static_cast<std::size_t>(t)] -
                                   static_cast<int>(row[static_cast<std::size_t>(position_of[static_cast<std::size_t>(t)])])));
      d = std::min(d, dg);
    }
    if (d > result.value) {
      result.value = d;
      result.exposed = true;
      build_rep();
      record();
    }
  }

  void leaf_attain(const Mask<W> &mask) {
    Mask<W> m = mask;
    build_rep();
    for (int i = 0; i < n; ++i)
      if (!((used >> i) & 1U))
        m |= setup.at(i, rep[static_cast<std::size_t>(i)]);
    if (!(m == setup.full))
      return;
    result.value = exact_distance(setup.code, rep.data());
    record();
    done = true;
  }

  void leaf_full() {
    build_rep();
    if (!all_farther_than(setup.code, rep.data(), result.value))
      return;
    result.value = exact_distance(setup.code, rep.data());
    record();
  }

  void descend(int depth, const Mask<W> &mask) {
    if (depth == depth_count) {
      ++result.candidates;
      switch (phase) {
      case Phase::exposed:
        leaf_exposed(mask);
        break;
      case Phase::attain:
        leaf_attain(mask);
        break;
      case Phase::full:
        leaf_full();
        break;
      }
      return;
    }
    if (phase != Phase::full && !can_cover(depth, mask))
      return;
    if (first_hit != nullptr && first_hit->load(std::memory_order_relaxed) < index)
      done = true;
    const int v = setup.order[static_cast<std::size_t>(depth)];
    for (int i = 0; i < n && !done; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (used & bit)
        continue;
      used |= bit;
      position_of[static_cast<std::size_t>(depth)] = i;
      descend(depth + 1, mask | setup.at(i, v));
      used &= ~bit;
    }
  }
};

template <int W>
RestrictedOutcome restricted_phase(const CodeTable &code, int rtilde, int threads, Phase phase) {
  const RestrictedSetup<W> setup(code, rtilde, phase);
  const int n = code.n;
  const int v0 = setup.order[0], v1 = setup.order[1];
  const int shard_count = n * n;
  std::vector<ShardResult> shards(static_cast<std::size_t>(shard_count));
  std::atomic<int> first_hit{shard_count};

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
  for (int s = 0; s < shard_count; ++s) {
    const int p0 = s / n, p1 = s % n;
    if (p0 == p1 || first_hit.load(std::memory_order_relaxed) < s)
      continue;
    RestrictedShard<W> shard(setup, phase);
    shard.index = s;
    if (phase == Phase::attain)
      shard.first_hit = &first_hit;
    shard.used = (std::uint64_t{1} << p0) | (std::uint64_t{1} << p1);
    shard.position_of[0] = p0;
    shard.position_of[1] = p1;
    shard.descend(2, setup.at(p0, v0) | setup.at(p1, v1));
    if (phase == Phase::attain && shard.result.value >= 0) {
      int seen = first_hit.load(std::memory_order_relaxed);
      while (s < seen && !first_hit.compare_exchange_weak(seen, s, std::memory_order_relaxed)) {
      }
    }
    shards[static_cast<std::size_t>(s)] = std::move(shard.result);
  }

  RestrictedOutcome out;
  for (int s = 0; s < shard_count; ++s) {
    const auto &r = shards[static_cast<std::size_t>(s)];
    out.representatives += r.candidates;
    out.exposed = out.exposed || r.exposed;
    // shards are in enumeration order, so the first strict improvement is
    // the first maximizer; in the attain phase the first hit is the answer
    if (r.value > out.value) {
      out.value = r.value;
      out.witness = r.witness;
      if (phase == Phase::attain)
        break;
    }
  }
  return out;
}

template <int W> RestrictedOutcome restricted_masked(const CodeTable &code, int rtilde, int threads) {
  RestrictedOutcome out = restricted_phase<W>(code, rtilde, threads, Phase::exposed);
  std::uint64_t visited = out.representatives;
  if (out.value < 0) {
    out = restricted_phase<W>(code, rtilde, threads, Phase::attain);
    visited += out.representatives;
  }
  if (out.value < 0) {
    out = restricted_phase<W>(code, rtilde, threads, Phase::full);
    visited += out.representatives;
  }
  out.representatives = visited;
  return out;
}

} // namespace

SearchOutcome covering_radius_omp(const CodeTable &code, int threads) {
  const int n = code.n;
  if (n == 1)
    return covering_radius_serial(code);
  // shard by the values at positions 1 and 2
  const int shard_count = n * n;
  std::vector<ShardResult> shards(static_cast<std::size_t>(shard_count));

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
  for (int s = 0; s < shard_count; ++s) {
    const int a = s / n + 1, b = s % n + 1;
    if (a == b)
      continue;
    std::vector<int> f;
    f.reserve(static_cast<std::size_t>(n));
    f.push_back(a);
    f.push_back(b);
    for (int v = 1; v <= n; ++v)
      if (v != a && v != b)
        f.push_back(v);
    ShardResult local;
    do {
      ++local.candidates;
      if (!all_farther_than(code, f.data(), local.value))
        continue;
      local.value = exact_distance(code, f.data());
      local.witness = f;
    } while (std::next_permutation(f.begin() + 2, f.end()));
    shards[static_cast<std::size_t>(s)] = std::move(local);
  }

  SearchOutcome out;
  for (const auto &s : shards) {
    out.candidates += s.candidates;
    if (s.value > out.value) {
      out.value = s.value;
      out.witness = s.witness;
    }
  }
  return out;
}

RestrictedOutcome restricted_omp(const CodeTable &code, int rtilde, int threads) {
  if (rtilde > code.n - 2 || 2 * rtilde <= code.n - 3)
    throw ValidationError("restricted search needs (n-3)/2 < rtilde <= n-2");
  if (code.n > 64)
    throw ValidationError("restricted search supports degree <= 64");
  const int words = (code.size + 63) / 64;
  if (words <= 1)
    return restricted_masked<1>(code, rtilde, threads);
  if (words <= 2)
    return restricted_masked<2>(code, rtilde, threads);
  if (words <= 4)
    return restricted_masked<4>(code, rtilde, threads);
  if (words <= 8)
    return restricted_masked<8>(code, rtilde, threads);
  throw ValidationError("restricted search supports codes of at most 512 elements");
}

} // namespace permcover::kernels
