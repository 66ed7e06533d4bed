#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permcover {

class GroupCode;

/// A bijection on {1..n} in one-line notation. Positions and values are
/// 1-based everywhere in the public interface.
class Permutation {
public:
  /// Validates that `images` is a bijection on {1..images.size()}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Parses "[2,3,1]" (one-line) or "(1,2,3)(4,5)" (cycles; fixed points may
  /// be omitted, so the degree must be supplied or is inferred from the
  /// largest symbol).
  static Permutation parse(std::string_view text, int degree = 0);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// f(i) for a 1-based position i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Multiset of cycle lengths, sorted ascending.
  std::vector<int> cycle_type() const;

  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &f);

/// (f o g)(i) = f(g(i)).
Permutation compose(const Permutation &f, const Permutation &g);
Permutation inverse(const Permutation &f);
/// h o g o h^-1: relabels every symbol s of g as h(s).
Permutation conjugate(const Permutation &h, const Permutation &g);

/// max_i |f(i) - g(i)|.
int linf_distance(const Permutation &f, const Permutation &g);
int linf_distance(std::span<const int> f, std::span<const int> g);

/// min over the code of linf_distance.
int distance_to_code(const Permutation &f, const GroupCode &code);

/// True iff distance_to_code(f, code) > r.
bool is_r_exposed(const Permutation &f, const GroupCode &code, int r);

/// Injective partial map position -> value on {1..n}.
class PartialPlacement {
public:
  explicit PartialPlacement(int n);

  int degree() const noexcept { return n_; }

  /// Throws ValidationError if the position or value is already taken.
  void assign(int position, int value);

  bool has_position(int position) const;
  bool has_value(int value) const;
  /// 0 when unassigned.
  int value_at(int position) const;

  /// (position, value) pairs sorted by position.
  std::vector<std::pair<int, int>> assignments() const;
  std::size_t size() const noexcept { return count_; }

  /// Unassigned positions in increasing order receive the unused values in
  /// increasing order.
  Permutation complete() const;

  /// Same, but the unused values are handed out in the given order (which must
  /// be a permutation of the unused values).
  Permutation complete_with(std::span<const int> unused_in_order) const;

  /// Unused values in increasing order.
  std::vector<int> unused_values() const;

  /// True iff f agrees with every assignment.
  bool extended_by(const Permutation &f) const;

private:
  int n_;
  std::size_t count_ = 0;
  std::vector<int> value_at_;   // index position-1, 0 = free
  std::vector<char> value_used_;
};

} // namespace permcover
