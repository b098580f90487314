#include "shadowlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "shadowlab/combinatorics.hpp"

namespace shadowlab {

namespace {
constexpr std::int64_t kMaxSpaceEdges = std::int64_t{1} << 22;
}

EdgeSpace::EdgeSpace(int n, int r) : n_(n), r_(r) {
  if (r < 1 || n < r || n > kMaxMaskVertices) throw std::invalid_argument("edge space needs 1 <= r <= n <= 64");
  if (binomial(n, r) > kMaxSpaceEdges) throw std::invalid_argument("edge space too large to index");
  edges_ = all_subsets(n, r);
  face_count_ = static_cast<int>(binomial(n, r - 1));
  faces_.reserve(edges_.size() * r);
  for (Mask e : edges_)
    bits::for_each(e, [&](int v) { faces_.push_back(static_cast<std::int32_t>(colex_rank(e & ~(Mask{1} << v)))); });
}

int EdgeSpace::index_of(Mask e) const {
  if (bits::count(e) != r_ || (n_ < 64 && (e >> n_))) throw std::invalid_argument("mask is not an edge of this space");
  return static_cast<int>(colex_rank(e));
}

std::vector<int> EdgeSpace::indices_of(const Hypergraph& h) const {
  if (h.n() != n_ || h.r() != r_) throw std::invalid_argument("hypergraph does not match edge space");
  std::vector<int> out;
  out.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out.push_back(index_of(h.mask(i)));
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph EdgeSpace::graph(std::span<const int> indices) const {
  std::vector<Mask> masks;
  masks.reserve(indices.size());
  for (int i : indices) masks.push_back(edges_[i]);
  return Hypergraph::from_masks(n_, r_, masks);
}

bool canonical_supported(int n, int r) {
  return r >= 1 && n >= r && n <= kMaxCanonicalVertices && binomial(n, r) <= kMaxCanonicalEdges;
}

Canonizer::Canonizer(int n, int r) : n_(n), r_(r), edge_count_(static_cast<int>(binomial(n, r))) {
  const EdgeSpace space(n, r);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int idx = 0; idx < edge_count_; ++idx) {
      Mask img = 0;
      bits::for_each(space.edge(idx), [&](int v) { bits::set(img, p[v]); });
      map_.push_back(static_cast<std::uint8_t>(space.index_of(img)));
    }
    ++perms_;
  } while (std::next_permutation(p.begin(), p.end()));
}

const Canonizer& Canonizer::get(int n, int r) {
  if (!canonical_supported(n, r))
    throw std::invalid_argument("canonical forms need n <= 8 and C(n, r) <= 128");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Canonizer>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, r}];
  if (!slot) slot.reset(new Canonizer(n, r));
  return *slot;
}

CanonKey Canonizer::key(std::span<const int> indices) {
  CanonKey k = 0;
  for (int i : indices) k |= CanonKey{1} << (127 - i);
  return k;
}

CanonKey Canonizer::image_key(std::size_t perm, std::span<const int> indices) const {
  const std::uint8_t* row = map_.data() + perm * edge_count_;
  CanonKey k = 0;
  for (int i : indices) k |= CanonKey{1} << (127 - row[i]);
  return k;
}

CanonKey Canonizer::canonical_key(std::span<const int> indices) const {
  CanonKey best = 0;
  for (std::size_t p = 0; p < perms_; ++p) best = std::max(best, image_key(p, indices));
  return best;
}

bool Canonizer::is_canonical(std::span<const int> indices) const {
  const CanonKey own = key(indices);
  for (std::size_t p = 1; p < perms_; ++p)
    if (image_key(p, indices) > own) return false;
  return true;
}

std::vector<int> Canonizer::canonical_indices(std::span<const int> indices) const {
  const CanonKey k = canonical_key(indices);
  std::vector<int> out;
  for (int i = 0; i < edge_count_; ++i)
    if ((k >> (127 - i)) & 1) out.push_back(i);
  return out;
}

CanonKey canonical_key(const Hypergraph& h) {
  const auto& c = Canonizer::get(h.n(), h.r());
  return c.canonical_key(EdgeSpace(h.n(), h.r()).indices_of(h));
}

Hypergraph canonical_form(const Hypergraph& h) {
  const auto& c = Canonizer::get(h.n(), h.r());
  const EdgeSpace space(h.n(), h.r());
  return space.graph(c.canonical_indices(space.indices_of(h)));
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.r() != b.r() || a.size() != b.size()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace shadowlab
