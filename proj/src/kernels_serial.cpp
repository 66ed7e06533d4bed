#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "permcover/error.hpp"
#include "permcover/kernels.hpp"

namespace permcover::kernels {

CodeTable CodeTable::from(const GroupCode &code) {
  if (code.degree() > 255)
    throw ValidationError("search kernels support degree <= 255");
  CodeTable table;
  table.n = code.degree();
  table.size = static_cast<int>(code.size());
  table.values.reserve(code.size() * static_cast<std::size_t>(table.n));
  for (const auto &g : code.elements())
    for (int v : g.images())
      table.values.push_back(static_cast<std::uint8_t>(v));
  return table;
}

namespace {

int distance_to_table(const CodeTable &code, std::span<const int> f) {
  int best = std::numeric_limits<int>::max();
  for (int g = 0; g < code.size; ++g) {
    const auto row = code.row(g);
    int d = 0;
    for (int i = 0; i < code.n; ++i)
      d = std::max(d, std::abs(f[static_cast<std::size_t>(i)] - static_cast<int>(row[static_cast<std::size_t>(i)])));
    best = std::min(best, d);
  }
  return best;
}

void check_restricted_args(const CodeTable &code, int rtilde) {
  if (rtilde > code.n - 2 || 2 * rtilde <= code.n - 3)
    throw ValidationError("restricted search needs (n-3)/2 < rtilde <= n-2");
}

struct SerialRestricted {
  const CodeTable &code;
  std::vector<int> order;
  std::vector<int> middle; // values outside the windows, ascending
  std::vector<int> position_of;
  std::vector<char> used;
  RestrictedOutcome out;

  void leaf() {
    std::vector<int> rep(static_cast<std::size_t>(code.n), 0);
    for (std::size_t t = 0; t < order.size(); ++t)
      rep[static_cast<std::size_t>(position_of[t])] = order[t];
    std::size_t next = 0;
    for (auto &slot : rep)
      if (slot == 0)
        slot = middle[next++];
    ++out.representatives;
    const int d = distance_to_table(code, rep);
    if (d > out.value) {
      out.value = d;
      out.witness = rep;
    }
  }

  void descend(std::size_t depth) {
    if (depth == order.size()) {
      leaf();
      return;
    }
    for (int i = 0; i < code.n; ++i) {
      if (used[static_cast<std::size_t>(i)])
        continue;
      used[static_cast<std::size_t>(i)] = 1;
      position_of[depth] = i;
      descend(depth + 1);
      used[static_cast<std::size_t>(i)] = 0;
    }
  }
};

} // namespace

std::vector<int> placement_order(int n, int rtilde) {
  const int width = n - rtilde - 1;
  std::vector<int> order;
  for (int t = 0; t < width; ++t) {
    order.push_back(1 + t);
    order.push_back(n - t);
  }
  return order;
}

SearchOutcome covering_radius_serial(const CodeTable &code) {
  SearchOutcome out;
  std::vector<int> f(static_cast<std::size_t>(code.n));
  std::iota(f.begin(), f.end(), 1);
  do {
    ++out.candidates;
    const int d = distance_to_table(code, f);
    if (d > out.value) {
      out.value = d;
      out.witness = f;
    }
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

RestrictedOutcome restricted_serial(const CodeTable &code, int rtilde) {
  check_restricted_args(code, rtilde);
  SerialRestricted search{code, placement_order(code.n, rtilde), {}, {}, {}, {}};
  for (int v = code.n - rtilde; v <= rtilde + 1; ++v)
    search.middle.push_back(v);
  search.position_of.assign(search.order.size(), 0);
  search.used.assign(static_cast<std::size_t>(code.n), 0);
  search.descend(0);
  search.out.exposed = search.out.value > rtilde;
  return search.out;
}

} // namespace permcover::kernels
