#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// Parsed construction string, e.g. "turan:6:3:3" or "fano-blowup:70:0.142857".
struct ConstructionSpec {
  enum class Kind {
    Turan,
    Star,
    Complete,
    CliquePlusIsolated,
    TuranPlusIsolated,
    Sts,
    StsBlowup,
    FanoBlowup,
    Expansion,
  };

  Kind kind = Kind::Turan;
  int n = 0;
  int r = 0;
  int l = 0;
  int k = 0;
  double alpha = 1.0;

  /// Throws std::invalid_argument naming the offending field position.
  static ConstructionSpec parse(std::string_view text);
  std::string to_string() const;
};

Hypergraph build(const ConstructionSpec& spec);

/// Generalized Turan hypergraph T_r(n, l): transversals of a balanced
/// l-partition; contiguous parts, larger parts first.
Hypergraph turan(int n, int r, int l);
std::int64_t turan_edge_count(int n, int r, int l);

/// Star centered at vertex 0.
Hypergraph star(int n, int r);
Hypergraph complete(int n, int r);

Hypergraph clique_plus_isolated(int n, int r, double alpha);
Hypergraph turan_plus_isolated(int n, int r, int l, double alpha);

/// Bose (k = 3 mod 6) or Skolem (k = 1 mod 6) Steiner triple system.
Hypergraph steiner_triple_system(int k);

/// Vertex i becomes a class of sizes[i] vertices, laid out contiguously.
Hypergraph blow_up(const Hypergraph& base, const std::vector<int>& sizes);

Hypergraph sts_blowup(int n, int k);

/// The Fano plane with lines {012, 234, 450, 063, 164, 265, 135}.
Hypergraph fano_plane();
/// Blow-up of the Fano plane: line 012 inflated to alpha*n each, the other
/// four points to beta*n with beta = (1 - 3 alpha) / 4.
Hypergraph fano_blowup(int n, double alpha);

/// Expansion of K_{l+1}: core 0..l, then r-2 fresh vertices per pair.
Hypergraph expansion(int r, int l);

/// Largest-remainder apportionment of n over nonnegative weights; ties go
/// to the lower index.
std::vector<int> apportion(int n, const std::vector<double>& weights);

}  // namespace shadowlab
