#pragma once

// Mask-level search kernels shared by the public detectors (any n) and the
// search engine (single-word masks). Edge order of the input span defines
// which witness is "first".

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "shadowlab/bits.hpp"
#include "shadowlab/combinatorics.hpp"

namespace shadowlab::detail {

template <class M>
M pair_mask(int n, int u, int v) {
  M m = MaskTraits<M>::empty(n);
  bits::set(m, u);
  bits::set(m, v);
  return m;
}

template <class M>
std::vector<int> to_vertices(const M& m) {
  std::vector<int> out;
  bits::for_each(m, [&](int v) { out.push_back(v); });
  return out;
}

template <class M>
std::vector<std::vector<int>> incidence(std::span<const M> edges, int n) {
  std::vector<std::vector<int>> inc(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    bits::for_each(edges[i], [&](int v) { inc[v].push_back(static_cast<int>(i)); });
  return inc;
}

// ---------------------------------------------------------------- T_r

/// First (a, b, c) with a < b in edge order, D = E_a xor E_b inside E_c.
template <class M>
std::optional<std::array<int, 3>> find_cancellative_triple(std::span<const M> edges, int n, int r) {
  const int m = static_cast<int>(edges.size());
  if (m < 3) return std::nullopt;
  const auto inc = incidence(edges, n);
  std::vector<int> cand;
  for (int a = 0; a < m; ++a) {
    cand.clear();
    bits::for_each(edges[a], [&](int v) {
      for (int b : inc[v])
        if (b > a) cand.push_back(b);
    });
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int b : cand) {
      const M d = edges[a] ^ edges[b];
      if (bits::count(d) > r) continue;
      for (int c : inc[bits::lowest(d)]) {
        if (c != a && c != b && bits::subset(d, edges[c])) return std::array<int, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

/// Whether h + e stays cancellative, given h is. Every new triple uses e.
inline bool cancellative_admits(std::span<const Mask> h, Mask e, int r) {
  // e as C: A xor B inside e  <=>  A \ e == B \ e with A != B.
  std::vector<Mask> keys;
  for (Mask a : h)
    if (a & e) keys.push_back(a & ~e);
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return false;
  // e as A: D = e xor B must sit inside some C != B.
  for (Mask b : h) {
    const Mask d = e ^ b;
    if (bits::count(d) > r) continue;
    for (Mask c : h)
      if (c != b && bits::subset(d, c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- cliques

/// Pair-coverage graph (the (r-2)-th shadow) as neighbor masks.
template <class M>
std::vector<M> coverage_graph(std::span<const M> edges, int n) {
  std::vector<M> adj(n, MaskTraits<M>::empty(n));
  for (const auto& e : edges) {
    bits::for_each(e, [&](int v) {
      adj[v] |= e;
      bits::reset(adj[v], v);
    });
  }
  return adj;
}

/// Visits k-cliques inside `cand` in lexicographic order; stops when the
/// visitor returns true. Returns whether it was stopped.
template <class M, class F>
bool for_each_clique(const std::vector<M>& adj, M cand, int k, std::vector<int>& stack, F&& visit) {
  if (k == 0) return visit(stack);
  while (bits::count(cand) >= k) {
    const int v = bits::lowest(cand);
    bits::reset(cand, v);
    stack.push_back(v);
    const bool stop = for_each_clique(adj, cand & adj[v], k - 1, stack, visit);
    stack.pop_back();
    if (stop) return true;
  }
  return false;
}

template <class M>
bool has_clique(const std::vector<M>& adj, M cand, int k) {
  std::vector<int> stack;
  return for_each_clique(adj, std::move(cand), k, stack, [](const std::vector<int>&) { return true; });
}

template <class M>
M active_vertices(const std::vector<M>& adj, int n) {
  M all = MaskTraits<M>::empty(n);
  for (int v = 0; v < n; ++v)
    if (bits::any(adj[v])) bits::set(all, v);
  return all;
}

/// Whether h + e stays free of covering (l+1)-cliques, given h is.
inline bool covering_clique_admits(std::span<const Mask> h, Mask e, int n, int l) {
  auto adj = coverage_graph<Mask>(h, n);
  std::vector<std::pair<int, int>> fresh;
  const auto ev = to_vertices(e);
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = i + 1; j < ev.size(); ++j)
      if (!bits::test(adj[ev[i]], ev[j])) fresh.emplace_back(ev[i], ev[j]);
  if (fresh.empty()) return true;
  for (int v : ev) adj[v] |= e & ~(Mask{1} << v);
  for (auto [u, v] : fresh)
    if (has_clique(adj, adj[u] & adj[v], l - 1)) return false;
  return true;
}

// ---------------------------------------------------------------- expansion

/// Edge per pair of `core` (pair order is lexicographic); extra vertices
/// pairwise disjoint and off the core.
template <class M>
std::optional<std::vector<int>> expansion_on_core(std::span<const M> edges, int n, const std::vector<int>& core) {
  M core_mask = MaskTraits<M>::empty(n);
  for (int v : core) bits::set(core_mask, v);
  struct Slot {
    M pair;
    std::vector<int> cand;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = i + 1; j < core.size(); ++j) {
      Slot s{pair_mask<M>(n, core[i], core[j]), {}};
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (!bits::subset(s.pair, edges[k])) continue;
        if (bits::any((edges[k] ^ s.pair) & core_mask)) continue;
        s.cand.push_back(static_cast<int>(k));
      }
      if (s.cand.empty()) return std::nullopt;
      slots.push_back(std::move(s));
    }
  }
  std::vector<int> order(slots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return slots[a].cand.size() < slots[b].cand.size(); });
  std::vector<int> pick(slots.size(), -1);
  auto rec = [&](auto&& self, std::size_t depth, const M& used) -> bool {
    if (depth == order.size()) return true;
    auto& slot = slots[order[depth]];
    for (int k : slot.cand) {
      const M extra = edges[k] ^ slot.pair;
      if (bits::any(extra & used)) continue;
      pick[order[depth]] = k;
      if (self(self, depth + 1, used | extra)) return true;
    }
    return false;
  };
  if (!rec(rec, 0, core_mask)) return std::nullopt;
  return pick;
}

struct CoreHit {
  std::vector<int> core;
  std::vector<int> edges;  // indices into the edge span
};

template <class M>
std::optional<CoreHit> find_expansion(std::span<const M> edges, int n, int r, int l) {
  const long long need = (l + 1) + (static_cast<long long>(l) * (l + 1) / 2) * (r - 2);
  if (n < need) return std::nullopt;
  const auto adj = coverage_graph<M>(edges, n);
  std::optional<CoreHit> hit;
  std::vector<int> stack;
  for_each_clique(adj, active_vertices(adj, n), l + 1, stack, [&](const std::vector<int>& core) {
    if (auto pick = expansion_on_core<M>(edges, n, core)) {
      hit = CoreHit{core, std::move(*pick)};
      return true;
    }
    return false;
  });
  return hit;
}

/// Whether h + e stays expansion-free, given h is. A new copy must use e
/// as the edge of some core pair, so the core meets e in two vertices.
inline bool expansion_admits(std::span<const Mask> h, Mask e, int n, int r, int l) {
  const long long need = (l + 1) + (static_cast<long long>(l) * (l + 1) / 2) * (r - 2);
  if (n < need) return true;
  std::vector<Mask> all(h.begin(), h.end());
  all.push_back(e);
  const std::span<const Mask> edges(all);
  const auto adj = coverage_graph<Mask>(edges, n);
  const auto ev = to_vertices(e);
  std::vector<int> stack;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      const int u = ev[i], v = ev[j];
      const bool hit = for_each_clique(adj, adj[u] & adj[v], l - 1, stack, [&](const std::vector<int>& rest) {
        std::vector<int> core(rest);
        core.push_back(u);
        core.push_back(v);
        std::sort(core.begin(), core.end());
        return expansion_on_core<Mask>(edges, n, core).has_value();
      });
      if (hit) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- D / D^r

template <class M>
M common_intersection(std::span<const M> edges, int n) {
  M all = MaskTraits<M>::full(n);
  for (const auto& e : edges) all &= e;
  return all;
}

/// Fewest edges of h whose traces on `target` have empty intersection.
template <class M>
std::optional<std::vector<int>> min_killing_set(std::span<const M> edges, const M& target) {
  struct Node {
    M state;
    int parent;
    int edge;
  };
  std::vector<Node> nodes{{target, -1, -1}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (!bits::any(nodes[head].state)) {
      std::vector<int> out;
      for (int at = static_cast<int>(head); nodes[at].parent >= 0; at = nodes[at].parent)
        out.push_back(nodes[at].edge);
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const M next = nodes[head].state & edges[k];
      if (next == nodes[head].state) continue;
      bool seen = false;
      for (const auto& nd : nodes)
        if (nd.state == next) {
          seen = true;
          break;
        }
      if (!seen) nodes.push_back({next, static_cast<int>(head), static_cast<int>(k)});
    }
  }
  return std::nullopt;
}

/// Searches core S for an F with <= C(|S|,2) edges covering S and empty
/// common intersection. Covering choices that agree on (E & I, E & S) are
/// interchangeable, so only one representative per key is expanded.
template <class M>
std::optional<std::vector<int>> d_member_on_core(std::span<const M> edges, int n, const std::vector<int>& core) {
  M core_mask = MaskTraits<M>::empty(n);
  for (int v : core) bits::set(core_mask, v);
  std::vector<M> pairs;
  std::vector<std::vector<int>> cand;
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = i + 1; j < core.size(); ++j) {
      pairs.push_back(pair_mask<M>(n, core[i], core[j]));
      std::vector<int> c;
      for (std::size_t k = 0; k < edges.size(); ++k)
        if (bits::subset(pairs.back(), edges[k])) c.push_back(static_cast<int>(k));
      if (c.empty()) return std::nullopt;
      cand.push_back(std::move(c));
    }
  }
  const std::size_t limit = pairs.size();
  std::vector<int> chosen;
  std::vector<int> result;

  auto finish = [&](const std::vector<int>& extra) {
    result = chosen;
    result.insert(result.end(), extra.begin(), extra.end());
  };

  auto rec = [&](auto&& self, std::size_t j, const M& inter, bool has_inter) -> bool {
    if (has_inter && !bits::any(inter)) {
      // Remaining pairs add at most one edge each, staying within the limit.
      for (std::size_t t = j; t < pairs.size(); ++t) {
        const bool covered = std::any_of(chosen.begin(), chosen.end(),
                                         [&](int k) { return bits::subset(pairs[t], edges[k]); });
        if (!covered) chosen.push_back(cand[t].front());
      }
      finish({});
      return true;
    }
    if (j == pairs.size()) {
      auto extra = min_killing_set<M>(edges, inter);
      if (extra && chosen.size() + extra->size() <= limit) {
        finish(*extra);
        return true;
      }
      return false;
    }
    const bool reusable = std::any_of(chosen.begin(), chosen.end(),
                                      [&](int k) { return bits::subset(pairs[j], edges[k]); });
    if (reusable && self(self, j + 1, inter, has_inter)) return true;
    std::vector<std::pair<M, M>> seen;
    for (int k : cand[j]) {
      if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
      const M next = has_inter ? (inter & edges[k]) : edges[k];
      std::pair<M, M> key{next, edges[k] & core_mask};
      if (has_inter) {
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
      }
      chosen.push_back(k);
      if (self(self, j + 1, next, true)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0, MaskTraits<M>::empty(n), false)) return std::nullopt;
  return result;
}

template <class M>
std::optional<CoreHit> find_d_member(std::span<const M> edges, int n, int r) {
  if (edges.empty() || bits::any(common_intersection(edges, n))) return std::nullopt;
  const auto adj = coverage_graph<M>(edges, n);
  std::optional<CoreHit> hit;
  std::vector<int> stack;
  for_each_clique(adj, active_vertices(adj, n), r + 1, stack, [&](const std::vector<int>& core) {
    if (auto pick = d_member_on_core<M>(edges, n, core)) {
      hit = CoreHit{core, std::move(*pick)};
      return true;
    }
    return false;
  });
  return hit;
}

}  // namespace shadowlab::detail
