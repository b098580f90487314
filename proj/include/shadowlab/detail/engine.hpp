#pragma once

// Internals shared by the parallel engine and the serial reference.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shadowlab/canonical.hpp"
#include "shadowlab/explore.hpp"

namespace shadowlab::detail {

/// Node and wall-clock budget shared by all workers of one run.
class Budget {
 public:
  explicit Budget(const SearchConfig& cfg);
  /// Accounts for one visited node; false once the budget is spent.
  bool charge();
  bool exhausted() const { return stop_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::uint64_t limit_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Current hypergraph as edge indices into an EdgeSpace, with face cover
/// counts for O(r) shadow updates. The state is always family-free.
class SearchState {
 public:
  SearchState(const EdgeSpace& space, const ForbiddenFamily& f);

  const EdgeSpace& space() const { return *space_; }
  bool admits(int j) const;
  void push(int j);
  void pop();
  /// Removes the edge at position pos (swap with last).
  void remove_at(std::size_t pos);
  int shadow_gain(int j) const;

  std::int64_t shadow() const { return shadow_; }
  std::int64_t size() const { return static_cast<std::int64_t>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  std::span<const Mask> masks() const { return masks_; }
  int last() const { return idx_.empty() ? -1 : idx_.back(); }

 private:
  void add_faces(int j);
  void drop_faces(int j);

  const EdgeSpace* space_;
  ForbiddenFamily family_;
  std::vector<int> idx_;
  std::vector<Mask> masks_;
  std::vector<std::int32_t> cover_;
  std::int64_t shadow_ = 0;
};

/// Mergeable partial result. Ties among maximisers keep the
/// lexicographically smallest sorted index list, so merging is
/// order-independent.
struct Accumulator {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> points;
  std::map<std::int64_t, std::pair<std::int64_t, std::vector<int>>> best;
  SearchStats stats;

  void record(std::int64_t s, std::int64_t m, const std::vector<int>& sorted_idx);
  void merge(const Accumulator& o);
  ExploreReport finish(const EdgeSpace& space, const ForbiddenFamily& f, const SearchConfig& cfg) const;
};

/// Visits the state's node, then its admissible (and, with `canon`,
/// canonical) children in index order.
void enumerate_subtree(SearchState& st, const Canonizer* canon, Budget& budget, Accumulator& acc,
                       const Visitor& visit);

/// Visits nodes with fewer than `depth` edges and returns the index lists
/// of depth-`depth` nodes in preorder, unvisited.
std::vector<std::vector<int>> collect_frontier(SearchState& st, const Canonizer* canon, int depth, Budget& budget,
                                               Accumulator& acc, const Visitor& visit);

/// Branch-and-bound state for one shadow target.
struct ShadowTarget {
  std::int64_t s = 0;
  std::int64_t kk_cap = 0;  // floor of the Kruskal-Katona bound
};

struct BoundBest {
  std::int64_t edges = -1;
  std::vector<int> idx;
  SearchStats stats;

  void merge(const BoundBest& o);
};

void bound_subtree(SearchState& st, const Canonizer* canon, const ShadowTarget& t, Budget& budget, BoundBest& best);
std::vector<std::vector<int>> bound_frontier(SearchState& st, const Canonizer* canon, const ShadowTarget& t, int depth,
                                             Budget& budget, BoundBest& best);

ShadowTarget make_target(int n, int r, std::int64_t s);
const Canonizer* canonizer_for(int n, int r, const SearchConfig& cfg);
ShadowQuery to_query(const EdgeSpace& space, const BoundBest& best);

}  // namespace shadowlab::detail
