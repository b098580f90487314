#pragma once

// Brute-force reference implementations on plain sorted vectors. They share
// no code with the library beyond the Hypergraph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <random>
#include <set>
#include <vector>

#include "shadowlab/hypergraph.hpp"

namespace oracle {

using shadowlab::Edge;
using shadowlab::Hypergraph;
using shadowlab::Vertex;
using Sets = std::set<std::vector<Vertex>>;

inline std::vector<Edge> edges_of(const Hypergraph& h) { return h.edges(); }

inline void combos(const std::vector<Vertex>& items, int k, const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == k) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      cur.push_back(items[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline std::vector<Vertex> range(int n) {
  std::vector<Vertex> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

inline std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline bool includes(const std::vector<Vertex>& big, const std::vector<Vertex>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Sets shadow_sets(const Hypergraph& h, int k) {
  Sets out;
  for (const auto& e : edges_of(h)) combos(e, k, [&](const auto& s) { out.insert(s); });
  return out;
}

/// (r - i)-sets whose every r-subset is an edge, for i <= -1.
inline Sets clique_sets(const Hypergraph& h, int size) {
  Sets edges;
  for (const auto& e : edges_of(h)) edges.insert(e);
  Sets out;
  combos(range(h.n()), size, [&](const auto& a) {
    bool all = true;
    combos(a, h.r(), [&](const auto& s) { all = all && edges.count(s); });
    if (all) out.insert(a);
  });
  return out;
}

inline std::vector<Vertex> sym_diff(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> d;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return d;
}

inline bool cancellative(const Hypergraph& h) {
  const auto es = edges_of(h);
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = 0; b < es.size(); ++b) {
      if (a == b) continue;
      const auto d = sym_diff(es[a], es[b]);
      for (std::size_t c = 0; c < es.size(); ++c)
        if (c != a && c != b && includes(es[c], d)) return false;
    }
  return true;
}

inline bool pair_covered(const std::vector<Edge>& es, Vertex u, Vertex v) {
  return std::any_of(es.begin(), es.end(), [&](const Edge& e) {
    return std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v);
  });
}

inline bool all_pairs_covered(const std::vector<Edge>& es, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!pair_covered(es, s[i], s[j])) return false;
  return true;
}

inline bool has_covering_clique(const Hypergraph& h, int l) {
  const auto es = edges_of(h);
  bool found = false;
  combos(range(h.n()), l + 1, [&](const auto& s) { found = found || all_pairs_covered(es, s); });
  return found;
}

/// Core S plus an injective edge choice per pair, extra vertices disjoint.
inline bool has_expansion(const Hypergraph& h, int l) {
  const auto es = edges_of(h);
  bool found = false;
  combos(range(h.n()), l + 1, [&](const std::vector<Vertex>& s) {
    if (found) return;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) pairs.emplace_back(s[i], s[j]);
    std::set<Vertex> used(s.begin(), s.end());
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
      if (k == pairs.size()) return true;
      for (const auto& e : es) {
        if (!std::binary_search(e.begin(), e.end(), pairs[k].first) ||
            !std::binary_search(e.begin(), e.end(), pairs[k].second))
          continue;
        std::vector<Vertex> extra;
        for (Vertex v : e)
          if (v != pairs[k].first && v != pairs[k].second) extra.push_back(v);
        if (std::any_of(extra.begin(), extra.end(), [&](Vertex v) { return used.count(v) > 0; })) continue;
        for (Vertex v : extra) used.insert(v);
        if (rec(k + 1)) return true;
        for (Vertex v : extra) used.erase(v);
      }
      return false;
    };
    found = rec(0);
  });
  return found;
}

/// Some F of at most C(r+1, 2) edges covers all pairs of an (r+1)-set and
/// has no common vertex. Exhaustive over edge subsets: small inputs only.
inline bool has_d_member(const Hypergraph& h) {
  const auto es = edges_of(h);
  const int r = h.r();
  const int limit = (r + 1) * r / 2;
  bool found = false;
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (found) return;
    if (!chosen.empty()) {
      std::vector<Vertex> common = chosen.front();
      for (const auto& e : chosen) {
        std::vector<Vertex> next;
        std::set_intersection(common.begin(), common.end(), e.begin(), e.end(), std::back_inserter(next));
        common = next;
      }
      if (common.empty()) {
        combos(range(h.n()), r + 1, [&](const auto& s) { found = found || all_pairs_covered(chosen, s); });
        if (found) return;
      }
    }
    if (static_cast<int>(chosen.size()) == limit) return;
    for (std::size_t i = start; i < es.size(); ++i) {
      chosen.push_back(es[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return found;
}

inline Hypergraph random_graph(int n, int r, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> es;
  combos(range(n), r, [&](const auto& e) {
    if (keep(rng)) es.push_back(e);
  });
  return Hypergraph(n, r, es);
}

inline Hypergraph complete_graph(int n, int r) {
  std::vector<Edge> es;
  combos(range(n), r, [&](const auto& e) { es.push_back(e); });
  return Hypergraph(n, r, es);
}

/// Turan count by direct sum over transversals of the balanced partition.
inline std::int64_t turan_count(int n, int r, int l) {
  std::vector<int> parts(l, n / l);
  for (int i = 0; i < n % l; ++i) ++parts[i];
  std::int64_t total = 0;
  combos(range(l), r, [&](const auto& pick) {
    std::int64_t prod = 1;
    for (Vertex i : pick) prod *= parts[i];
    total += prod;
  });
  return total;
}

}  // namespace oracle
