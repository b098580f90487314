#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "shadowlab/bits.hpp"

namespace shadowlab {

using Vertex = std::uint32_t;
using Rational = boost::rational<std::int64_t>;
using Edge = std::vector<Vertex>;

/// An r-uniform hypergraph on {0, ..., n-1}.
///
/// Edges are stored flat, each sorted ascending, the list ordered
/// lexicographically and duplicate-free. Values are immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Empty r-graph on n vertices.
  Hypergraph(int n, int r);
  /// Validates and canonicalizes. Throws std::invalid_argument on a wrong
  /// edge size, out-of-range or repeated vertex, or a duplicate edge.
  Hypergraph(int n, int r, std::vector<Edge> edges);

  /// Builds from single-word masks (n <= 64); duplicates are rejected.
  static Hypergraph from_masks(int n, int r, std::span<const Mask> masks);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return r_ == 0 ? 0 : verts_.size() / r_; }
  bool empty() const { return verts_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {verts_.data() + i * r_, static_cast<std::size_t>(r_)};
  }
  std::vector<Edge> edges() const;
  bool contains(std::span<const Vertex> sorted_edge) const;

  Mask mask(std::size_t i) const;
  /// One mask per edge, in canonical order; requires n <= 64.
  std::vector<Mask> masks() const;
  std::vector<WideMask> wide_masks() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void canonicalize(std::vector<Edge> edges);

  int n_ = 0;
  int r_ = 1;
  std::vector<Vertex> verts_;
};

/// (shadow density, edge density) with provenance.
struct DensityPoint {
  double x = 0.0;
  double y = 0.0;
  int n = 0;  // 0 marks an analytic/limit point
  std::string source;
};

/// i-th shadow. i >= 1: (r-i)-subsets of edges; i == 0: H; i <= -1: the
/// (r-i)-sets spanning a complete sub-r-graph. Result keeps n.
Hypergraph shadow(const Hypergraph& h, int i);

/// |H| / C(n, r).
Rational edge_density(const Hypergraph& h);
/// |shadow(H)| / C(n, r-1).
Rational shadow_density(const Hypergraph& h);
/// Exact density pair converted at the report boundary.
DensityPoint density_point(const Hypergraph& h, std::string source);

/// Link of v: the (r-1)-graph {E \ {v} : v in E in H}, same vertex set.
Hypergraph link(const Hypergraph& h, Vertex v);
int degree(const Hypergraph& h, Vertex v);
int pair_degree(const Hypergraph& h, Vertex u, Vertex v);
/// Sub-hypergraph induced on S, relabeled order-preservingly to 0..|S|-1.
Hypergraph induced(const Hypergraph& h, std::span<const Vertex> s);
/// Sum of degrees over S.
std::int64_t sigma(const Hypergraph& h, std::span<const Vertex> s);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

}  // namespace shadowlab
