#include "permcover/group_codes.hpp"

#include <algorithm>
#include <sstream>

#include "permcover/error.hpp"

namespace permcover {

FactorProfile::FactorProfile(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw ValidationError("factor profile must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw ValidationError("factor profile parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("factor profile must be non-increasing");
    degree_ += parts_[i];
  }
}

std::uint64_t FactorProfile::order() const noexcept {
  std::uint64_t out = 1;
  for (int p : parts_)
    out *= static_cast<std::uint64_t>(p);
  return out;
}

int FactorProfile::offset(int b) const {
  if (b < 0 || b > size())
    throw ValidationError("factor profile block index out of range");
  int out = 0;
  for (int i = 0; i < b; ++i)
    out += parts_[static_cast<std::size_t>(i)];
  return out;
}

std::string to_string(CodeKind kind) {
  switch (kind) {
  case CodeKind::cyclic:
    return "cyclic";
  case CodeKind::dihedral:
    return "dihedral";
  case CodeKind::product:
    return "product";
  case CodeKind::relabeled:
    return "relabeled";
  case CodeKind::explicit_set:
    return "explicit";
  }
  return "unknown";
}

CodeDescriptor CodeDescriptor::cyclic(int n) {
  if (n < 1)
    throw ValidationError("cyclic code needs n >= 1");
  return CodeDescriptor(CodeKind::cyclic, n);
}

CodeDescriptor CodeDescriptor::dihedral(int n) {
  if (n < 3)
    throw ValidationError("dihedral code needs n >= 3");
  return CodeDescriptor(CodeKind::dihedral, n);
}

CodeDescriptor CodeDescriptor::product(FactorProfile profile) {
  CodeDescriptor d(CodeKind::product, profile.degree());
  d.profile_ = std::move(profile);
  return d;
}

CodeDescriptor CodeDescriptor::relabeled(CodeDescriptor base, Permutation conjugator) {
  if (base.degree() != conjugator.degree())
    throw ValidationError("relabel: conjugator degree does not match the code");
  CodeDescriptor d(CodeKind::relabeled, base.degree());
  d.base_ = std::make_shared<const CodeDescriptor>(std::move(base));
  d.conjugator_ = std::move(conjugator);
  return d;
}

CodeDescriptor CodeDescriptor::explicit_set(int n) {
  if (n < 1)
    throw ValidationError("explicit code needs n >= 1");
  return CodeDescriptor(CodeKind::explicit_set, n);
}

const FactorProfile &CodeDescriptor::profile() const {
  if (kind_ != CodeKind::product)
    throw ValidationError("descriptor is not a product code");
  return *profile_;
}

const CodeDescriptor &CodeDescriptor::base() const {
  if (kind_ != CodeKind::relabeled)
    throw ValidationError("descriptor is not a relabeled code");
  return *base_;
}

const Permutation &CodeDescriptor::conjugator() const {
  if (kind_ != CodeKind::relabeled)
    throw ValidationError("descriptor is not a relabeled code");
  return *conjugator_;
}

const CodeDescriptor &CodeDescriptor::root() const {
  const CodeDescriptor *d = this;
  while (d->kind_ == CodeKind::relabeled)
    d = d->base_.get();
  return *d;
}

Permutation CodeDescriptor::total_conjugator() const {
  if (kind_ != CodeKind::relabeled)
    return Permutation::identity(degree_);
  // pi_outer (pi_inner C pi_inner^-1) pi_outer^-1
  return compose(*conjugator_, base_->total_conjugator());
}

bool CodeDescriptor::is_product_like() const { return root().kind_ == CodeKind::product; }

std::string CodeDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind_) {
  case CodeKind::cyclic:
    os << "G_" << degree_;
    break;
  case CodeKind::dihedral:
    os << "D_" << degree_;
    break;
  case CodeKind::product: {
    os << "G_{";
    auto parts = profile_->parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
      os << (i ? "," : "") << parts[i];
    os << "}";
    break;
  }
  case CodeKind::relabeled:
    os << base_->to_string() << "^" << conjugator_->to_string();
    break;
  case CodeKind::explicit_set:
    os << "explicit(" << degree_ << ")";
    break;
  }
  return os.str();
}

bool operator==(const CodeDescriptor &a, const CodeDescriptor &b) {
  if (a.kind_ != b.kind_ || a.degree_ != b.degree_)
    return false;
  switch (a.kind_) {
  case CodeKind::product:
    return *a.profile_ == *b.profile_;
  case CodeKind::relabeled:
    return *a.conjugator_ == *b.conjugator_ && *a.base_ == *b.base_;
  default:
    return true;
  }
}

GroupCode::GroupCode(CodeDescriptor descriptor, std::vector<Permutation> elements)
    : descriptor_(std::move(descriptor)), elements_(std::move(elements)) {
  for (const auto &g : elements_)
    if (g.degree() != descriptor_.degree())
      throw ValidationError("code element degree does not match the code");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool GroupCode::contains(const Permutation &g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

GroupCode make_cyclic(int n) {
  auto descriptor = CodeDescriptor::cyclic(n);
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      images[static_cast<std::size_t>(i - 1)] = mod_star(i + t - 1, n);
    elements.emplace_back(std::move(images));
  }
  return GroupCode(std::move(descriptor), std::move(elements));
}

GroupCode make_dihedral(int n) {
  auto descriptor = CodeDescriptor::dihedral(n);
  std::vector<Permutation> elements;
  elements.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
      a[static_cast<std::size_t>(j - 1)] = mod_star(i - j, n);
      b[static_cast<std::size_t>(j - 1)] = mod_star(n - i + 1 + j, n);
    }
    elements.emplace_back(std::move(a));
    elements.emplace_back(std::move(b));
  }
  return GroupCode(std::move(descriptor), std::move(elements));
}

GroupCode make_product(const FactorProfile &profile) {
  const int n = profile.degree();
  const auto parts = profile.parts();
  std::vector<Permutation> elements;
  elements.reserve(profile.order());
  std::vector<int> shift(parts.size(), 0);
  while (true) {
    std::vector<int> images(static_cast<std::size_t>(n));
    int offset = 0;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      for (int i = 1; i <= parts[b]; ++i)
        images[static_cast<std::size_t>(offset + i - 1)] = offset + mod_star(i + shift[b], parts[b]);
      offset += parts[b];
    }
    elements.emplace_back(std::move(images));
    std::size_t b = 0;
    while (b < parts.size() && ++shift[b] == parts[b])
      shift[b++] = 0;
    if (b == parts.size())
      break;
  }
  return GroupCode(CodeDescriptor::product(profile), std::move(elements));
}

GroupCode relabel(const GroupCode &code, const Permutation &pi) {
  auto descriptor = CodeDescriptor::relabeled(code.descriptor(), pi);
  std::vector<Permutation> elements;
  elements.reserve(code.size());
  for (const auto &g : code.elements())
    elements.push_back(conjugate(pi, g));
  return GroupCode(std::move(descriptor), std::move(elements));
}

GroupCode make_explicit(int n, std::vector<Permutation> elements) {
  if (elements.empty())
    throw ValidationError("explicit code must be nonempty");
  return GroupCode(CodeDescriptor::explicit_set(n), std::move(elements));
}

GroupCode build_code(const CodeDescriptor &descriptor) {
  switch (descriptor.kind()) {
  case CodeKind::cyclic:
    return make_cyclic(descriptor.degree());
  case CodeKind::dihedral:
    return make_dihedral(descriptor.degree());
  case CodeKind::product:
    return make_product(descriptor.profile());
  case CodeKind::relabeled:
    return relabel(build_code(descriptor.base()), descriptor.conjugator());
  case CodeKind::explicit_set:
    break;
  }
  throw ValidationError("an explicit code cannot be rebuilt from its descriptor");
}

std::vector<Block> blocks(const CodeDescriptor &descriptor) {
  if (!descriptor.is_product_like())
    throw ValidationError("blocks: " + descriptor.to_string() + " is not a product code");
  const auto &profile = descriptor.root().profile();
  const Permutation pi = descriptor.total_conjugator();
  std::vector<Block> out;
  int offset = 0;
  for (int p : profile.parts()) {
    Block block{{}, pi(offset + 1)};
    for (int i = offset + 1; i <= offset + p; ++i)
      block.locations.push_back(pi(i));
    std::sort(block.locations.begin(), block.locations.end());
    out.push_back(std::move(block));
    offset += p;
  }
  return out;
}

std::vector<Block> blocks(const GroupCode &code) { return blocks(code.descriptor()); }

} // namespace permcover
