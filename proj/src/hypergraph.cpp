#include "shadowlab/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "shadowlab/combinatorics.hpp"

namespace shadowlab {

namespace {

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

using EdgeSet = std::unordered_set<Edge, EdgeHash>;

}  // namespace

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (r < 1) throw std::invalid_argument("uniformity must be at least 1");
}

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges) : Hypergraph(n, r) {
  canonicalize(std::move(edges));
}

void Hypergraph::canonicalize(std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != r_) {
      throw std::invalid_argument("edge has " + std::to_string(e.size()) +
                                  " vertices, expected " + std::to_string(r_));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge repeats a vertex");
    if (!e.empty() && e.back() >= static_cast<Vertex>(n_))
      throw std::invalid_argument("edge vertex " + std::to_string(e.back()) +
                                  " out of range [0, " + std::to_string(n_) + ")");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  verts_.clear();
  verts_.reserve(edges.size() * r_);
  for (const auto& e : edges) verts_.insert(verts_.end(), e.begin(), e.end());
}

Hypergraph Hypergraph::from_masks(int n, int r, std::span<const Mask> masks) {
  if (n > kMaxMaskVertices) throw std::invalid_argument("mask hypergraphs need n <= 64");
  std::vector<Edge> edges;
  edges.reserve(masks.size());
  for (Mask m : masks) {
    Edge e;
    bits::for_each(m, [&](int v) { e.push_back(static_cast<Vertex>(v)); });
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, r, std::move(edges));
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

bool Hypergraph::contains(std::span<const Vertex> sorted_edge) const {
  if (static_cast<int>(sorted_edge.size()) != r_) return false;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto e = edge(mid);
    if (std::lexicographical_compare(e.begin(), e.end(), sorted_edge.begin(), sorted_edge.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < size() && std::equal(sorted_edge.begin(), sorted_edge.end(), edge(lo).begin());
}

Mask Hypergraph::mask(std::size_t i) const {
  Mask m = 0;
  for (auto v : edge(i)) bits::set(m, static_cast<int>(v));
  return m;
}

std::vector<Mask> Hypergraph::masks() const {
  if (n_ > kMaxMaskVertices) throw std::invalid_argument("mask view needs n <= 64");
  std::vector<Mask> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = mask(i);
  return out;
}

std::vector<WideMask> Hypergraph::wide_masks() const {
  std::vector<WideMask> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    WideMask m(n_);
    for (auto v : edge(i)) bits::set(m, static_cast<int>(v));
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

std::vector<Edge> upper_shadow_edges(const Hypergraph& h, int k) {
  // all k-subsets of edges
  std::set<Edge> out;
  std::vector<int> items(h.r());
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    for (int j = 0; j < h.r(); ++j) items[j] = static_cast<int>(e[j]);
    for_each_combination(items, k, [&](const std::vector<int>& c) {
      out.insert(Edge(c.begin(), c.end()));
    });
  }
  return {out.begin(), out.end()};
}

// Sets of size level+1 all of whose level-subsets lie in `lower`.
std::vector<Edge> extend_complete(const std::vector<Edge>& lower, int n) {
  EdgeSet members(lower.begin(), lower.end());
  std::set<Edge> out;
  for (const auto& a : lower) {
    for (int v = static_cast<int>(a.back()) + 1; v < n; ++v) {
      Edge cand = a;
      cand.push_back(static_cast<Vertex>(v));
      bool complete = true;
      // dropping the new vertex yields `a`; check the others
      for (std::size_t drop = 0; drop + 1 < cand.size() && complete; ++drop) {
        Edge sub;
        sub.reserve(cand.size() - 1);
        for (std::size_t t = 0; t < cand.size(); ++t)
          if (t != drop) sub.push_back(cand[t]);
        complete = members.count(sub) > 0;
      }
      if (complete) out.insert(std::move(cand));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

Hypergraph shadow(const Hypergraph& h, int i) {
  const int k = h.r() - i;
  if (i >= h.r()) throw std::invalid_argument("shadow index must be below the uniformity");
  if (k > h.n()) throw std::invalid_argument("shadow uniformity exceeds the vertex count");
  if (i == 0) return h;
  if (i > 0) return Hypergraph(h.n(), k, upper_shadow_edges(h, k));
  std::vector<Edge> level = h.edges();
  for (int size = h.r(); size < k; ++size) {
    level = extend_complete(level, h.n());
    if (level.empty()) break;
  }
  return Hypergraph(h.n(), k, std::move(level));
}

Rational edge_density(const Hypergraph& h) {
  if (h.n() < h.r()) throw std::invalid_argument("edge density needs n >= r");
  return Rational(static_cast<std::int64_t>(h.size()), binomial(h.n(), h.r()));
}

Rational shadow_density(const Hypergraph& h) {
  if (h.r() < 2) throw std::invalid_argument("shadow density needs r >= 2");
  if (h.n() < h.r() - 1) throw std::invalid_argument("shadow density needs n >= r - 1");
  const auto s = shadow(h, 1);
  return Rational(static_cast<std::int64_t>(s.size()), binomial(h.n(), h.r() - 1));
}

DensityPoint density_point(const Hypergraph& h, std::string source) {
  return {to_double(shadow_density(h)), to_double(edge_density(h)), h.n(), std::move(source)};
}

Hypergraph link(const Hypergraph& h, Vertex v) {
  if (v >= static_cast<Vertex>(h.n())) throw std::out_of_range("link vertex out of range");
  if (h.r() < 2) throw std::invalid_argument("link needs r >= 2");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    if (std::find(e.begin(), e.end(), v) == e.end()) continue;
    Edge rest;
    for (auto u : e)
      if (u != v) rest.push_back(u);
    out.push_back(std::move(rest));
  }
  return Hypergraph(h.n(), h.r() - 1, std::move(out));
}

int degree(const Hypergraph& h, Vertex v) {
  if (v >= static_cast<Vertex>(h.n())) throw std::out_of_range("vertex out of range");
  int d = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    d += std::binary_search(e.begin(), e.end(), v);
  }
  return d;
}

int pair_degree(const Hypergraph& h, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("pair degree needs distinct vertices");
  if (u >= static_cast<Vertex>(h.n()) || v >= static_cast<Vertex>(h.n()))
    throw std::out_of_range("vertex out of range");
  int d = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    d += std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v);
  }
  return d;
}

Hypergraph induced(const Hypergraph& h, std::span<const Vertex> s) {
  std::vector<Vertex> keep(s.begin(), s.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && keep.back() >= static_cast<Vertex>(h.n()))
    throw std::out_of_range("induced vertex out of range");
  std::vector<int> relabel(h.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    Edge e;
    bool inside = true;
    for (auto v : h.edge(i)) {
      if (relabel[v] < 0) {
        inside = false;
        break;
      }
      e.push_back(static_cast<Vertex>(relabel[v]));
    }
    if (inside) out.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(keep.size()), h.r(), std::move(out));
}

std::int64_t sigma(const Hypergraph& h, std::span<const Vertex> s) {
  std::vector<std::int64_t> deg(h.n(), 0);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (auto v : h.edge(i)) ++deg[v];
  std::int64_t total = 0;
  for (auto v : s) {
    if (v >= static_cast<Vertex>(h.n())) throw std::out_of_range("sigma vertex out of range");
    total += deg[v];
  }
  return total;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

}  // namespace shadowlab
