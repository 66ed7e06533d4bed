#include "permcover/exposure.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "permcover/error.hpp"

namespace permcover {

std::vector<int> WindowSets::bottom() const {
  std::vector<int> out;
  for (int v = 1; v <= bottom_last(); ++v)
    out.push_back(v);
  return out;
}

std::vector<int> WindowSets::top() const {
  std::vector<int> out;
  for (int v = std::max(top_first(), 1); v <= n; ++v)
    out.push_back(v);
  return out;
}

std::vector<int> WindowSets::values() const {
  auto out = bottom();
  for (int v : top())
    if (!in_bottom(v))
      out.push_back(v);
  return out;
}

WindowSets window_sets(int n, int r) {
  if (n < 1 || r < 0 || r > n - 1)
    throw ValidationError("window_sets: need 0 <= r <= n-1 (n=" + std::to_string(n) +
                          ", r=" + std::to_string(r) + ")");
  return {n, r};
}

namespace {

// Block structure used for A-set anchoring.
std::vector<Block> anchoring_blocks(const GroupCode &code) {
  if (code.descriptor().is_product_like())
    return blocks(code);
  const int n = code.degree();
  Block whole{{}, code.descriptor().total_conjugator()(1)};
  for (int i = 1; i <= n; ++i)
    whole.locations.push_back(i);
  return {whole};
}

const Block &block_of(const std::vector<Block> &bs, int position) {
  for (const auto &b : bs)
    if (std::binary_search(b.locations.begin(), b.locations.end(), position))
      return b;
  throw ValidationError("position " + std::to_string(position) + " is in no block");
}

ASet scan_aset(const GroupCode &code, const Block &block, int position, int target, int r) {
  ASet out{position, target, block.anchor, {}};
  for (const auto &g : code.elements()) {
    if (std::abs(target - g(position)) <= r)
      continue;
    const auto images = g.images();
    auto it = std::find(images.begin(), images.end(), block.anchor);
    out.members.push_back(static_cast<int>(it - images.begin()) + 1);
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

void require_position(const GroupCode &code, int position, int target, int r) {
  const int n = code.degree();
  if (position < 1 || position > n || target < 1 || target > n)
    throw ValidationError("A-set: position/value outside [1," + std::to_string(n) + "]");
  if (r < 0)
    throw ValidationError("A-set: r must be nonnegative");
}

} // namespace

ASet aset(const GroupCode &code, int position, int target, int r) {
  require_position(code, position, target, r);
  const auto bs = anchoring_blocks(code);
  return scan_aset(code, block_of(bs, position), position, target, r);
}

ExposureExplanation explain_exposure(const Permutation &f, const GroupCode &code, int r) {
  if (!code.descriptor().is_product_like())
    throw ValidationError("exposure_by_asets: " + code.descriptor().to_string() +
                          " is not a (relabeled) product code");
  if (f.degree() != code.degree())
    throw ValidationError("exposure_by_asets: degree mismatch");
  if (r < 0)
    throw ValidationError("exposure_by_asets: r must be nonnegative");

  ExposureExplanation out{r, {}, false, false, distance_to_code(f, code)};
  for (const auto &block : blocks(code)) {
    BlockCoverage cov{block, {}, {}, false};
    for (int i : block.locations) {
      cov.asets.push_back(scan_aset(code, block, i, f(i), r));
      const auto &m = cov.asets.back().members;
      cov.covered_members.insert(cov.covered_members.end(), m.begin(), m.end());
    }
    std::sort(cov.covered_members.begin(), cov.covered_members.end());
    cov.covered_members.erase(std::unique(cov.covered_members.begin(), cov.covered_members.end()),
                              cov.covered_members.end());
    cov.covered = cov.covered_members == block.locations;
    out.exposed_by_asets = out.exposed_by_asets || cov.covered;
    out.blocks.push_back(std::move(cov));
  }
  out.exposed_direct = out.distance > r;
  return out;
}

bool exposure_by_asets(const Permutation &f, const GroupCode &code, int r) {
  return explain_exposure(f, code, r).exposed_by_asets;
}

int counting_bound(const GroupCode &code, int position, int target, int r) {
  require_position(code, position, target, r);
  const auto &d = code.descriptor();
  if (!d.is_product_like() || d.root().profile().size() != 2)
    throw ValidationError("counting_bound: requires a (p,q)-type code");
  const auto parts = d.root().profile().parts();
  const int p = parts[0], q = parts[1], n = p + q;
  const auto bottom_size = [&](int j) { return n - r - j; };
  const auto top_size = [&](int j) { return j - r - 1; };
  const bool in_b = target <= n - r - 1;
  const bool in_t = target >= r + 2;

  if (d.kind() == CodeKind::product && r >= p && r <= n) {
    if (position > p && in_b)
      return bottom_size(target);
    if (position <= p && in_t)
      return top_size(target);
    return 0;
  }
  if (!(2 * r > n - 2 && r < n))
    throw ValidationError("counting_bound: r=" + std::to_string(r) +
                          " outside (p+q)/2-1 < r < p+q for a relabeled code");
  if (in_b)
    return bottom_size(target);
  if (in_t)
    return top_size(target);
  return 0;
}

} // namespace permcover
