#include "permcover/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "permcover/error.hpp"
#include "permcover/group_codes.hpp"

namespace permcover {

namespace {

void require_same_degree(const Permutation &f, const Permutation &g, const char *what) {
  if (f.degree() != g.degree()) {
    std::ostringstream os;
    os << what << ": degree mismatch (" << f.degree() << " vs " << g.degree() << ")";
    throw ValidationError(os.str());
  }
}

// Reads a comma separated list of integers until `close`. `pos` is left just
// past the closing character.
std::vector<int> read_int_list(std::string_view text, std::size_t &pos, char close) {
  std::vector<int> out;
  bool expect_number = true;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == close) {
      if (expect_number && !out.empty())
        throw ValidationError("permutation text: trailing comma");
      ++pos;
      return out;
    }
    if (c == ',') {
      if (expect_number)
        throw ValidationError("permutation text: unexpected ','");
      expect_number = true;
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-')
      throw ValidationError(std::string("permutation text: unexpected character '") + c + "'");
    if (!expect_number)
      throw ValidationError("permutation text: missing ','");
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
    long value = std::strtol(std::string(text.substr(pos, end - pos)).c_str(), nullptr, 10);
    if (value < 1 || value > std::numeric_limits<int>::max())
      throw ValidationError("permutation text: symbols must be positive");
    out.push_back(static_cast<int>(value));
    expect_number = false;
    pos = end;
  }
  throw ValidationError(std::string("permutation text: missing '") + close + "'");
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1)
    throw ValidationError("permutation must have degree >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > n)
      throw ValidationError("permutation image " + std::to_string(v) + " outside [1," +
                            std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v - 1)])
      throw ValidationError("permutation repeats value " + std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1)
    throw ValidationError("identity: degree must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == text.size())
    throw ValidationError("permutation text: empty");

  if (text[pos] == '[') {
    ++pos;
    auto images = read_int_list(text, pos, ']');
    for (; pos < text.size(); ++pos)
      if (!std::isspace(static_cast<unsigned char>(text[pos])))
        throw ValidationError("permutation text: trailing characters");
    if (degree != 0 && degree != static_cast<int>(images.size()))
      throw ValidationError("permutation text: expected degree " + std::to_string(degree));
    return Permutation(std::move(images));
  }

  if (text[pos] != '(')
    throw ValidationError("permutation text: expected '[' or '('");

  std::vector<std::vector<int>> cycles;
  int largest = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(')
      throw ValidationError("permutation text: expected '(' in cycle notation");
    ++pos;
    auto cycle = read_int_list(text, pos, ')');
    for (int s : cycle)
      largest = std::max(largest, s);
    cycles.push_back(std::move(cycle));
  }
  const int n = degree != 0 ? degree : largest;
  if (largest > n)
    throw ValidationError("cycle symbol exceeds degree " + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> moved(static_cast<std::size_t>(n), 0);
  for (const auto &cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      int s = cycle[t];
      if (moved[static_cast<std::size_t>(s - 1)])
        throw ValidationError("cycle notation repeats symbol " + std::to_string(s));
      moved[static_cast<std::size_t>(s - 1)] = 1;
      images[static_cast<std::size_t>(s - 1)] = cycle[(t + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1)
      return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i] - 1)) {
      seen[i] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &f) { return os << f.to_string(); }

Permutation compose(const Permutation &f, const Permutation &g) {
  require_same_degree(f, g, "compose");
  std::vector<int> out(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i)
    out[static_cast<std::size_t>(i - 1)] = f(g(i));
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation &f) {
  std::vector<int> out(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i)
    out[static_cast<std::size_t>(f(i) - 1)] = i;
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation &h, const Permutation &g) {
  require_same_degree(h, g, "conjugate");
  // (h g h^-1)(h(i)) = h(g(i))
  std::vector<int> out(static_cast<std::size_t>(g.degree()));
  for (int i = 1; i <= g.degree(); ++i)
    out[static_cast<std::size_t>(h(i) - 1)] = h(g(i));
  return Permutation(std::move(out));
}

int linf_distance(std::span<const int> f, std::span<const int> g) {
  if (f.size() != g.size())
    throw ValidationError("linf_distance: degree mismatch");
  int best = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    best = std::max(best, std::abs(f[i] - g[i]));
  return best;
}

int linf_distance(const Permutation &f, const Permutation &g) {
  require_same_degree(f, g, "linf_distance");
  return linf_distance(f.images(), g.images());
}

int distance_to_code(const Permutation &f, const GroupCode &code) {
  if (code.size() == 0)
    throw ValidationError("distance_to_code: empty code");
  if (f.degree() != code.degree())
    throw ValidationError("distance_to_code: degree mismatch");
  int best = std::numeric_limits<int>::max();
  for (const auto &g : code.elements()) {
    best = std::min(best, linf_distance(f.images(), g.images()));
    if (best == 0)
      break;
  }
  return best;
}

bool is_r_exposed(const Permutation &f, const GroupCode &code, int r) {
  if (f.degree() != code.degree())
    throw ValidationError("is_r_exposed: degree mismatch");
  for (const auto &g : code.elements())
    if (linf_distance(f.images(), g.images()) <= r)
      return false;
  return true;
}

PartialPlacement::PartialPlacement(int n)
    : n_(n), value_at_(static_cast<std::size_t>(std::max(n, 0)), 0),
      value_used_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1)
    throw ValidationError("placement degree must be >= 1");
}

void PartialPlacement::assign(int position, int value) {
  if (position < 1 || position > n_ || value < 1 || value > n_)
    throw ValidationError("placement (" + std::to_string(position) + " -> " +
                          std::to_string(value) + ") outside [1," + std::to_string(n_) + "]");
  if (value_at_[static_cast<std::size_t>(position - 1)] != 0)
    throw ValidationError("placement position " + std::to_string(position) + " already assigned");
  if (value_used_[static_cast<std::size_t>(value - 1)])
    throw ValidationError("placement value " + std::to_string(value) + " already used");
  value_at_[static_cast<std::size_t>(position - 1)] = value;
  value_used_[static_cast<std::size_t>(value - 1)] = 1;
  ++count_;
}

bool PartialPlacement::has_position(int position) const {
  return position >= 1 && position <= n_ && value_at_[static_cast<std::size_t>(position - 1)] != 0;
}

bool PartialPlacement::has_value(int value) const {
  return value >= 1 && value <= n_ && value_used_[static_cast<std::size_t>(value - 1)] != 0;
}

int PartialPlacement::value_at(int position) const {
  if (position < 1 || position > n_)
    return 0;
  return value_at_[static_cast<std::size_t>(position - 1)];
}

std::vector<std::pair<int, int>> PartialPlacement::assignments() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(count_);
  for (int i = 1; i <= n_; ++i)
    if (int v = value_at_[static_cast<std::size_t>(i - 1)])
      out.emplace_back(i, v);
  return out;
}

std::vector<int> PartialPlacement::unused_values() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (!value_used_[static_cast<std::size_t>(v - 1)])
      out.push_back(v);
  return out;
}

Permutation PartialPlacement::complete() const { return complete_with(unused_values()); }

Permutation PartialPlacement::complete_with(std::span<const int> unused_in_order) const {
  if (unused_in_order.size() != static_cast<std::size_t>(n_) - count_)
    throw ValidationError("complete_with: wrong number of fill values");
  std::vector<int> images(value_at_);
  std::size_t next = 0;
  for (auto &slot : images)
    if (slot == 0)
      slot = unused_in_order[next++];
  return Permutation(std::move(images)); // rejects fills that reuse placed values
}

bool PartialPlacement::extended_by(const Permutation &f) const {
  if (f.degree() != n_)
    return false;
  for (int i = 1; i <= n_; ++i) {
    int v = value_at_[static_cast<std::size_t>(i - 1)];
    if (v != 0 && f(i) != v)
      return false;
  }
  return true;
}

} // namespace permcover
