#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// Forbidden families. `l` is the clique parameter: CoveringClique(r, l)
/// forbids cores of size l + 1.
struct ForbiddenFamily {
  enum class Kind { Empty, Cancellative, CoveringClique, ExpansionClique, DiscontinuityD, DiscontinuityDr };

  Kind kind = Kind::Empty;
  int r = 0;
  int l = 0;

  static ForbiddenFamily empty() { return {}; }
  static ForbiddenFamily cancellative(int r);
  static ForbiddenFamily covering_clique(int r, int l);
  static ForbiddenFamily expansion_clique(int r, int l);
  static ForbiddenFamily discontinuity_d();
  static ForbiddenFamily discontinuity_dr(int r);

  /// Compact form: "empty", "T:r", "K:r:l+1", "H:r:l+1", "D", "Dr:r".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument with the offending token.
  static ForbiddenFamily parse(std::string_view text);

  friend bool operator==(const ForbiddenFamily&, const ForbiddenFamily&) = default;
};

/// Certificate that a hypergraph contains a member of a family.
///   Cancellative: edges = {A, B, C} with A xor B inside C; vertices = A u B u C.
///   CoveringClique: vertices = the core S; edges = first covering edge per pair.
///   ExpansionClique: vertices = S; edges[k] covers the k-th pair of S (lex order).
///   D / Dr: vertices = S; edges cover S and have empty common intersection.
struct Witness {
  ForbiddenFamily::Kind kind = ForbiddenFamily::Kind::Empty;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Detector result: `free` is true when no member was found.
struct Detection {
  bool free = true;
  std::optional<Witness> witness;
};

/// Cancellative iff no distinct A, B, C with A xor B inside C. Any such
/// triple spans at most |A u B| <= 2r - 1 vertices, so this is exactly
/// T_r-freeness. Returns the first (A, B) in edge order, then the first C.
Detection is_cancellative(const Hypergraph& h);

/// Searches the pair-coverage graph for an (l+1)-clique; lexicographically
/// first core wins. n < l + 1 is simply free.
Detection covering_clique_free(const Hypergraph& h, int l);

/// Searches for the expansion of K_{l+1}: a core S with one edge per pair,
/// whose r - 2 extra vertices are pairwise disjoint and avoid S.
Detection expansion_free(const Hypergraph& h, int l);

/// Family D (r = 3) and D^r: an F inside H with at most C(r+1, 2) edges
/// covering every pair of an (r+1)-set and no vertex common to all of F.
Detection d_family_free(const Hypergraph& h);
Detection dr_family_free(const Hypergraph& h, int r);

/// Dispatch; throws std::invalid_argument when parameters do not match H.
Detection is_free(const Hypergraph& h, const ForbiddenFamily& f);

/// Re-checks a witness against H without using the detectors' search code.
bool verify_witness(const Hypergraph& h, const ForbiddenFamily& f, const Witness& w);

std::string witness_json(const Witness& w, const ForbiddenFamily& f);

}  // namespace shadowlab
