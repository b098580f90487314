#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/families.hpp"
#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

struct SearchConfig {
  enum class Mode { ExactEnumerate, BranchBound, RandomMaximal, Anneal };

  Mode mode = Mode::ExactEnumerate;
  bool iso_reduction = false;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 0;  // 0: unlimited
  double time_budget_secs = 0.0;  // 0: unlimited
  int threads = 0;                // 0: available parallelism
  int split_depth = 2;

  // stochastic modes
  int samples = 100;
  double target_x = 0.5;
  double target_y = 0.1;
  int anneal_steps = 100000;
  double anneal_t0 = 1.0;
  double anneal_ratio = 0.999;

  static Mode parse_mode(std::string_view text);
  static std::string to_string(Mode m);
  bool stochastic() const { return mode == Mode::RandomMaximal || mode == Mode::Anneal; }
};

struct SearchStats {
  std::uint64_t visited = 0;
  std::uint64_t pruned_family = 0;
  std::uint64_t pruned_iso = 0;
  std::uint64_t pruned_bound = 0;
  bool partial = false;
};

/// An attained (|dH|, |H|) pair at finite n; multiplicity counts the
/// visited hypergraphs (or samples) realizing it.
struct AttainedPoint {
  std::int64_t shadow_size = 0;
  std::int64_t edge_count = 0;
  std::uint64_t multiplicity = 0;
};

struct ExtremalEntry {
  std::int64_t max_edges = 0;
  Hypergraph witness;
};

struct ExploreReport {
  ForbiddenFamily family;
  int n = 0;
  int r = 0;
  SearchConfig config;
  std::vector<AttainedPoint> points;  // sorted by (shadow_size, edge_count)
  /// Largest |H| per attained shadow size; the witness is the first such
  /// hypergraph in edge-index lexicographic order.
  std::map<std::int64_t, ExtremalEntry> extremal;
  /// Shadow sizes proven unattainable (branch-and-bound only).
  std::vector<std::int64_t> infeasible;
  SearchStats stats;

  DensityPoint density(const AttainedPoint& p) const;
  std::optional<std::int64_t> max_edges() const;
};

/// Called once per visited hypergraph (edges as masks, colex order). The
/// parallel engine calls it from several threads.
using Visitor = std::function<void(std::span<const Mask> edges, std::int64_t shadow_size)>;

// ---------------------------------------------------------------- Algorithm 1

struct ReduceResult {
  enum class Status { GuardDensity, GuardSize, Reduced, Stalled };
  Hypergraph graph;
  Status status = Status::Reduced;
  std::int64_t target_edges = 0;
  std::int64_t removed = 0;
};

std::string to_string(ReduceResult::Status s);

/// Shadow-preserving edge removal down to floor(d C(n,r)) edges, removing
/// the lexicographically smallest removable edge each step. Both guards are
/// evaluated on the input. Stalled: no removable edge is left before the
/// target is reached.
ReduceResult algorithm1_reduce(const Hypergraph& h, double d);

// ---------------------------------------------------------------- exact search

/// Depth-first extension over edges in colex order, pruning on family
/// containment; with iso_reduction only canonical representatives
/// (n <= 8) are expanded. Subtrees at cfg.split_depth run in parallel.
ExploreReport enumerate_free(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg,
                             const Visitor& visit = {});
/// Single-threaded reference with identical results.
ExploreReport enumerate_free_serial(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg,
                                    const Visitor& visit = {});

struct ShadowQuery {
  enum class Outcome { Found, Infeasible, Unknown };
  Outcome outcome = Outcome::Unknown;
  std::int64_t max_edges = -1;
  std::optional<Hypergraph> witness;
  SearchStats stats;
};

/// Largest |H| over F-free H on n vertices with |dH| = s, by branch and
/// bound. Infeasible when the search completes without reaching s;
/// Unknown when a budget ran out first, in which case max_edges and witness
/// hold the best hypergraph seen so far, if any.
ShadowQuery max_edges_given_shadow(int n, int r, const ForbiddenFamily& f, std::int64_t s, const SearchConfig& cfg);
ShadowQuery max_edges_given_shadow_serial(int n, int r, const ForbiddenFamily& f, std::int64_t s,
                                          const SearchConfig& cfg);

// ---------------------------------------------------------------- sampling

/// Sample i uses the stream seeded by splitmix64(seed ^ i): insert all
/// edges in random order, rejecting those that create a family member.
std::vector<DensityPoint> random_maximal_free(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg);
ExploreReport sample_maximal(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg);

/// Random edge flips toward (target_x, target_y) under a geometric
/// temperature schedule; one chain per sample, best state reported.
ExploreReport anneal(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg);

/// Dispatch on cfg.mode. Branch-bound mode queries every shadow size.
ExploreReport point_cloud(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace shadowlab
