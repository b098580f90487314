// Engine primitives and the single-threaded reference drivers.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shadowlab/bounds.hpp"
#include "shadowlab/combinatorics.hpp"
#include "shadowlab/detail/engine.hpp"
#include "shadowlab/detail/family_kernels.hpp"

namespace shadowlab::detail {

using Kind = ForbiddenFamily::Kind;

Budget::Budget(const SearchConfig& cfg) : limit_(cfg.node_budget) {
  if (cfg.time_budget_secs > 0)
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(cfg.time_budget_secs));
}

bool Budget::charge() {
  if (stop_.load(std::memory_order_relaxed)) return false;
  const auto k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (limit_ != 0 && k > limit_) {
    stop_.store(true, std::memory_order_relaxed);
    return false;
  }
  if (deadline_ && (k & 1023u) == 0 && std::chrono::steady_clock::now() > *deadline_) {
    stop_.store(true, std::memory_order_relaxed);
    return false;
  }
  return true;
}

// ---------------------------------------------------------------- state

SearchState::SearchState(const EdgeSpace& space, const ForbiddenFamily& f)
    : space_(&space), family_(f), cover_(space.face_count(), 0) {
  if (f.kind != Kind::Empty && f.r != space.r())
    throw std::invalid_argument("family " + f.to_string() + " does not match uniformity " + std::to_string(space.r()));
}

bool SearchState::admits(int j) const {
  const Mask e = space_->edge(j);
  const int n = space_->n(), r = space_->r();
  switch (family_.kind) {
    case Kind::Empty: return true;
    case Kind::Cancellative: return cancellative_admits(masks_, e, r);
    case Kind::CoveringClique: return covering_clique_admits(masks_, e, n, family_.l);
    case Kind::ExpansionClique: return expansion_admits(masks_, e, n, r, family_.l);
    case Kind::DiscontinuityD:
    case Kind::DiscontinuityDr: {
      std::vector<Mask> all(masks_);
      all.push_back(e);
      return !find_d_member<Mask>(all, n, r).has_value();
    }
  }
  return true;
}

void SearchState::add_faces(int j) {
  for (auto f : space_->faces(j))
    if (cover_[f]++ == 0) ++shadow_;
}

void SearchState::drop_faces(int j) {
  for (auto f : space_->faces(j))
    if (--cover_[f] == 0) --shadow_;
}

int SearchState::shadow_gain(int j) const {
  int g = 0;
  for (auto f : space_->faces(j)) g += cover_[f] == 0;
  return g;
}

void SearchState::push(int j) {
  idx_.push_back(j);
  masks_.push_back(space_->edge(j));
  add_faces(j);
}

void SearchState::pop() {
  drop_faces(idx_.back());
  idx_.pop_back();
  masks_.pop_back();
}

void SearchState::remove_at(std::size_t pos) {
  drop_faces(idx_[pos]);
  idx_[pos] = idx_.back();
  masks_[pos] = masks_.back();
  idx_.pop_back();
  masks_.pop_back();
}

// ---------------------------------------------------------------- accumulator

void Accumulator::record(std::int64_t s, std::int64_t m, const std::vector<int>& sorted_idx) {
  ++points[{s, m}];
  auto it = best.find(s);
  if (it == best.end()) {
    best.emplace(s, std::make_pair(m, sorted_idx));
  } else if (m > it->second.first || (m == it->second.first && sorted_idx < it->second.second)) {
    it->second = {m, sorted_idx};
  }
}

void Accumulator::merge(const Accumulator& o) {
  for (const auto& [k, c] : o.points) points[k] += c;
  for (const auto& [s, entry] : o.best) {
    auto it = best.find(s);
    if (it == best.end() || entry.first > it->second.first ||
        (entry.first == it->second.first && entry.second < it->second.second))
      best[s] = entry;
  }
  stats.visited += o.stats.visited;
  stats.pruned_family += o.stats.pruned_family;
  stats.pruned_iso += o.stats.pruned_iso;
  stats.pruned_bound += o.stats.pruned_bound;
  stats.partial = stats.partial || o.stats.partial;
}

ExploreReport Accumulator::finish(const EdgeSpace& space, const ForbiddenFamily& f, const SearchConfig& cfg) const {
  ExploreReport rep;
  rep.family = f;
  rep.n = space.n();
  rep.r = space.r();
  rep.config = cfg;
  for (const auto& [k, c] : points) rep.points.push_back({k.first, k.second, c});
  for (const auto& [s, entry] : best) rep.extremal.emplace(s, ExtremalEntry{entry.first, space.graph(entry.second)});
  rep.stats = stats;
  return rep;
}

// ---------------------------------------------------------------- enumeration

namespace {

// Tries to extend by j; on success the state holds the child.
template <class Stats>
bool try_child(SearchState& st, const Canonizer* canon, int j, Stats& stats) {
  if (!st.admits(j)) {
    ++stats.pruned_family;
    return false;
  }
  st.push(j);
  if (canon && !canon->is_canonical(st.indices())) {
    ++stats.pruned_iso;
    st.pop();
    return false;
  }
  return true;
}

bool visit_node(SearchState& st, Budget& budget, Accumulator& acc, const Visitor& visit) {
  if (!budget.charge()) {
    acc.stats.partial = true;
    return false;
  }
  ++acc.stats.visited;
  acc.record(st.shadow(), st.size(), st.indices());
  if (visit) visit(st.masks(), st.shadow());
  return true;
}

}  // namespace

void enumerate_subtree(SearchState& st, const Canonizer* canon, Budget& budget, Accumulator& acc,
                       const Visitor& visit) {
  if (!visit_node(st, budget, acc, visit)) return;
  const int total = st.space().size();
  for (int j = st.last() + 1; j < total; ++j) {
    if (budget.exhausted()) {
      acc.stats.partial = true;
      return;
    }
    if (!try_child(st, canon, j, acc.stats)) continue;
    enumerate_subtree(st, canon, budget, acc, visit);
    st.pop();
  }
}

std::vector<std::vector<int>> collect_frontier(SearchState& st, const Canonizer* canon, int depth, Budget& budget,
                                               Accumulator& acc, const Visitor& visit) {
  std::vector<std::vector<int>> out;
  auto rec = [&](auto&& self) -> void {
    if (st.size() >= depth) {
      out.push_back(st.indices());
      return;
    }
    if (!visit_node(st, budget, acc, visit)) return;
    const int total = st.space().size();
    for (int j = st.last() + 1; j < total; ++j) {
      if (!try_child(st, canon, j, acc.stats)) continue;
      self(self);
      st.pop();
    }
  };
  rec(rec);
  return out;
}

// ---------------------------------------------------------------- branch and bound

ShadowTarget make_target(int n, int r, std::int64_t s) {
  if (s < 0 || s > binomial(n, r - 1)) throw std::invalid_argument("shadow size out of range [0, C(n, r-1)]");
  const double kk = kruskal_katona_max_edges(s, r, n);
  return {s, static_cast<std::int64_t>(std::floor(kk + 1e-9))};
}

void BoundBest::merge(const BoundBest& o) {
  if (o.edges > edges || (o.edges == edges && o.edges >= 0 && o.idx < idx)) {
    edges = o.edges;
    idx = o.idx;
  }
  stats.visited += o.stats.visited;
  stats.pruned_family += o.stats.pruned_family;
  stats.pruned_iso += o.stats.pruned_iso;
  stats.pruned_bound += o.stats.pruned_bound;
  stats.partial = stats.partial || o.stats.partial;
}

namespace {

// Visits the node; returns the children worth expanding, or nullopt when
// the node is cut.
std::optional<std::vector<int>> bound_node(SearchState& st, const ShadowTarget& t, Budget& budget, BoundBest& best) {
  if (!budget.charge()) {
    best.stats.partial = true;
    return std::nullopt;
  }
  ++best.stats.visited;
  if (st.shadow() == t.s && st.size() > best.edges) {
    best.edges = st.size();
    best.idx = st.indices();
  }
  std::vector<int> addable;
  std::int64_t reach = st.shadow();
  const int total = st.space().size();
  for (int j = st.last() + 1; j < total; ++j) {
    const int g = st.shadow_gain(j);
    if (st.shadow() + g > t.s) {
      ++best.stats.pruned_bound;
      continue;
    }
    addable.push_back(j);
    reach += g;
  }
  const std::int64_t ub = std::min<std::int64_t>(st.size() + static_cast<std::int64_t>(addable.size()), t.kk_cap);
  if (addable.empty()) return addable;
  if (reach < t.s || ub <= best.edges) {
    ++best.stats.pruned_bound;
    return std::nullopt;
  }
  return addable;
}

}  // namespace

void bound_subtree(SearchState& st, const Canonizer* canon, const ShadowTarget& t, Budget& budget, BoundBest& best) {
  auto kids = bound_node(st, t, budget, best);
  if (!kids) return;
  for (int j : *kids) {
    if (budget.exhausted()) {
      best.stats.partial = true;
      return;
    }
    if (!try_child(st, canon, j, best.stats)) continue;
    bound_subtree(st, canon, t, budget, best);
    st.pop();
  }
}

std::vector<std::vector<int>> bound_frontier(SearchState& st, const Canonizer* canon, const ShadowTarget& t, int depth,
                                             Budget& budget, BoundBest& best) {
  std::vector<std::vector<int>> out;
  auto rec = [&](auto&& self) -> void {
    if (st.size() >= depth) {
      out.push_back(st.indices());
      return;
    }
    auto kids = bound_node(st, t, budget, best);
    if (!kids) return;
    for (int j : *kids) {
      if (!try_child(st, canon, j, best.stats)) continue;
      self(self);
      st.pop();
    }
  };
  rec(rec);
  return out;
}

const Canonizer* canonizer_for(int n, int r, const SearchConfig& cfg) {
  if (!cfg.iso_reduction) return nullptr;
  if (!canonical_supported(n, r))
    throw std::invalid_argument("isomorphism reduction needs n <= 8 and C(n, r) <= 128");
  return &Canonizer::get(n, r);
}

ShadowQuery to_query(const EdgeSpace& space, const BoundBest& best) {
  ShadowQuery q;
  q.stats = best.stats;
  if (best.edges >= 0) {
    q.max_edges = best.edges;
    q.witness = space.graph(best.idx);
  }
  if (best.stats.partial)
    q.outcome = ShadowQuery::Outcome::Unknown;
  else
    q.outcome = best.edges >= 0 ? ShadowQuery::Outcome::Found : ShadowQuery::Outcome::Infeasible;
  return q;
}

}  // namespace shadowlab::detail

namespace shadowlab {

ExploreReport enumerate_free_serial(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg,
                                    const Visitor& visit) {
  const EdgeSpace space(n, r);
  const auto* canon = detail::canonizer_for(n, r, cfg);
  detail::SearchState st(space, f);
  detail::Budget budget(cfg);
  detail::Accumulator acc;
  detail::enumerate_subtree(st, canon, budget, acc, visit);
  return acc.finish(space, f, cfg);
}

ShadowQuery max_edges_given_shadow_serial(int n, int r, const ForbiddenFamily& f, std::int64_t s,
                                          const SearchConfig& cfg) {
  const EdgeSpace space(n, r);
  const auto target = detail::make_target(n, r, s);
  const auto* canon = detail::canonizer_for(n, r, cfg);
  detail::SearchState st(space, f);
  detail::Budget budget(cfg);
  detail::BoundBest best;
  detail::bound_subtree(st, canon, target, budget, best);
  return detail::to_query(space, best);
}

}  // namespace shadowlab
