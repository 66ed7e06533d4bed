#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permcover/permutation.hpp"

namespace permcover {

/// m mod* n: the unique representative of m modulo n in [1, n].
constexpr int mod_star(long long m, int n) {
  long long r = m % n;
  if (r <= 0)
    r += n;
  return static_cast<int>(r);
}

/// Non-increasing composition (p_1 >= ... >= p_k >= 1) of the degree.
class FactorProfile {
public:
  /// Rejects empty, non-positive or unsorted input (it never sorts silently).
  explicit FactorProfile(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int degree() const noexcept { return degree_; }
  int smallest() const noexcept { return parts_.back(); }
  std::uint64_t order() const noexcept;
  /// Number of points before block `b` (0-based block index).
  int offset(int b) const;

  friend bool operator==(const FactorProfile &, const FactorProfile &) = default;

private:
  std::vector<int> parts_;
  int degree_ = 0;
};

enum class CodeKind { cyclic, dihedral, product, relabeled, explicit_set };

std::string to_string(CodeKind kind);

/// Parameters that identify one of the supported code families.
class CodeDescriptor {
public:
  static CodeDescriptor cyclic(int n);
  static CodeDescriptor dihedral(int n);
  static CodeDescriptor product(FactorProfile profile);
  static CodeDescriptor relabeled(CodeDescriptor base, Permutation conjugator);
  static CodeDescriptor explicit_set(int n);

  CodeKind kind() const noexcept { return kind_; }
  int degree() const noexcept { return degree_; }

  /// Product profile; throws unless kind() == product.
  const FactorProfile &profile() const;
  /// Base code of a relabeling; throws unless kind() == relabeled.
  const CodeDescriptor &base() const;
  const Permutation &conjugator() const;

  /// The non-relabeled code at the bottom of a relabeling chain.
  const CodeDescriptor &root() const;
  /// Composite conjugator pi with code = pi root pi^-1 (identity if not relabeled).
  Permutation total_conjugator() const;

  /// product, or relabeled(...product...)
  bool is_product_like() const;

  std::string to_string() const;

  friend bool operator==(const CodeDescriptor &a, const CodeDescriptor &b);

private:
  CodeDescriptor(CodeKind kind, int degree) : kind_(kind), degree_(degree) {}

  CodeKind kind_;
  int degree_;
  std::optional<FactorProfile> profile_;
  std::shared_ptr<const CodeDescriptor> base_;
  std::optional<Permutation> conjugator_;
};

/// An enumerated permutation group, elements kept in lexicographic one-line
/// order.
class GroupCode {
public:
  GroupCode(CodeDescriptor descriptor, std::vector<Permutation> elements);

  const CodeDescriptor &descriptor() const noexcept { return descriptor_; }
  CodeKind kind() const noexcept { return descriptor_.kind(); }
  int degree() const noexcept { return descriptor_.degree(); }
  std::size_t size() const noexcept { return elements_.size(); }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  bool contains(const Permutation &g) const;

  /// Same element set (descriptors are ignored).
  bool same_elements(const GroupCode &other) const { return elements_ == other.elements_; }

private:
  CodeDescriptor descriptor_;
  std::vector<Permutation> elements_;
};

GroupCode make_cyclic(int n);
GroupCode make_dihedral(int n);
GroupCode make_product(const FactorProfile &profile);
/// {pi g pi^-1 : g in code}, tagged relabeled.
GroupCode relabel(const GroupCode &code, const Permutation &pi);
/// Any set of permutations of one degree; no group check is made.
GroupCode make_explicit(int n, std::vector<Permutation> elements);

/// Rebuilds the code a descriptor names. explicit_set cannot be rebuilt.
GroupCode build_code(const CodeDescriptor &descriptor);

/// One orbit of a product-like code: the code maps `locations` onto itself.
/// `anchor` is the image under the conjugator of the block's first point.
struct Block {
  std::vector<int> locations; // sorted
  int anchor;
};

/// Location sets of a product or relabeled-product code (one per factor, in
/// factor order). Throws ValidationError for other kinds.
std::vector<Block> blocks(const GroupCode &code);
std::vector<Block> blocks(const CodeDescriptor &descriptor);

} // namespace permcover
