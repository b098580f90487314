#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// Characteristic string of an edge set over the colex-ordered r-subsets of
/// [n]; edge index 0 is the most significant bit.
using CanonKey = unsigned __int128;

inline constexpr int kMaxCanonicalVertices = 8;
inline constexpr int kMaxCanonicalEdges = 128;

/// All r-subsets of {0..n-1} in colex order (numeric mask order), with the
/// colex ranks of each edge's (r-1)-faces.
class EdgeSpace {
 public:
  EdgeSpace(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(edges_.size()); }
  Mask edge(int idx) const { return edges_[idx]; }
  const std::vector<Mask>& edges() const { return edges_; }
  int index_of(Mask e) const;
  /// Colex ranks of the r faces of edge idx, each in [0, face_count()).
  std::span<const std::int32_t> faces(int idx) const {
    return {faces_.data() + static_cast<std::size_t>(idx) * r_, static_cast<std::size_t>(r_)};
  }
  int face_count() const { return face_count_; }

  std::vector<int> indices_of(const Hypergraph& h) const;
  Hypergraph graph(std::span<const int> indices) const;

 private:
  int n_, r_;
  int face_count_ = 0;
  std::vector<Mask> edges_;
  std::vector<std::int32_t> faces_;
};

bool canonical_supported(int n, int r);

/// Brute-force canonical labelling over all n! vertex permutations. The
/// canonical form of an edge set is its image with the largest key.
class Canonizer {
 public:
  /// Shared instance per (n, r); throws std::invalid_argument when
  /// canonical_supported(n, r) is false.
  static const Canonizer& get(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t permutation_count() const { return perms_; }

  static CanonKey key(std::span<const int> indices);
  CanonKey canonical_key(std::span<const int> indices) const;
  bool is_canonical(std::span<const int> indices) const;
  /// Sorted edge indices of the canonical image.
  std::vector<int> canonical_indices(std::span<const int> indices) const;

 private:
  Canonizer(int n, int r);
  CanonKey image_key(std::size_t perm, std::span<const int> indices) const;

  int n_, r_, edge_count_;
  std::size_t perms_ = 0;
  std::vector<std::uint8_t> map_;  // perm * edge_count + idx -> image idx
};

CanonKey canonical_key(const Hypergraph& h);
Hypergraph canonical_form(const Hypergraph& h);
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace shadowlab
