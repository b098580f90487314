#include "shadowlab/explore.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <stdexcept>

#include "shadowlab/combinatorics.hpp"
#include "shadowlab/detail/engine.hpp"

namespace shadowlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SearchConfig::Mode SearchConfig::parse_mode(std::string_view text) {
  if (text == "exact" || text == "exact-enumerate") return Mode::ExactEnumerate;
  if (text == "branch-bound" || text == "bb") return Mode::BranchBound;
  if (text == "random-maximal" || text == "random") return Mode::RandomMaximal;
  if (text == "anneal") return Mode::Anneal;
  throw std::invalid_argument("unknown search mode '" + std::string(text) + "'");
}

std::string SearchConfig::to_string(Mode m) {
  switch (m) {
    case Mode::ExactEnumerate: return "exact";
    case Mode::BranchBound: return "branch-bound";
    case Mode::RandomMaximal: return "random-maximal";
    case Mode::Anneal: return "anneal";
  }
  return "?";
}

DensityPoint ExploreReport::density(const AttainedPoint& p) const {
  const double x = static_cast<double>(p.shadow_size) / static_cast<double>(binomial(n, r - 1));
  const double y = static_cast<double>(p.edge_count) / static_cast<double>(binomial(n, r));
  return {x, y, n, "finite-n attainable"};
}

std::optional<std::int64_t> ExploreReport::max_edges() const {
  std::optional<std::int64_t> best;
  for (const auto& [s, e] : extremal)
    if (!best || e.max_edges > *best) best = e.max_edges;
  return best;
}

namespace {

int thread_count(const SearchConfig& cfg) { return cfg.threads > 0 ? cfg.threads : omp_get_max_threads(); }

// Runs body(i) for i in [0, count) on the pool; the first exception wins.
template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(shadowlab_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

void restore(detail::SearchState& st, const std::vector<int>& idx) {
  for (int j : idx) st.push(j);
}

}  // namespace

// ---------------------------------------------------------------- Algorithm 1

std::string to_string(ReduceResult::Status s) {
  switch (s) {
    case ReduceResult::Status::GuardDensity: return "guard: density";
    case ReduceResult::Status::GuardSize: return "guard: size";
    case ReduceResult::Status::Reduced: return "reduced";
    case ReduceResult::Status::Stalled: return "stalled";
  }
  return "?";
}

ReduceResult algorithm1_reduce(const Hypergraph& h, double d) {
  if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("density threshold must lie in [0, 1]");
  const int n = h.n(), r = h.r();
  if (n < r || r < 2) throw std::invalid_argument("Algorithm 1 needs n >= r >= 2");
  const std::int64_t total = binomial(n, r);
  const auto target = static_cast<std::int64_t>(std::floor(d * static_cast<double>(total) + 1e-9));
  const auto m = static_cast<std::int64_t>(h.size());

  ReduceResult out{h, ReduceResult::Status::Reduced, target, 0};
  if (m <= target) {
    out.status = ReduceResult::Status::GuardDensity;
    return out;
  }
  if (m <= binomial(n, r - 1)) {
    out.status = ReduceResult::Status::GuardSize;
    return out;
  }

  // face ids per edge
  std::map<Edge, int> face_id;
  std::vector<std::vector<int>> faces(m);
  for (std::int64_t i = 0; i < m; ++i) {
    const auto e = h.edge(i);
    for (int skip = 0; skip < r; ++skip) {
      Edge f;
      for (int t = 0; t < r; ++t)
        if (t != skip) f.push_back(e[t]);
      auto [it, fresh] = face_id.try_emplace(std::move(f), static_cast<int>(face_id.size()));
      faces[i].push_back(it->second);
    }
  }
  std::vector<int> cover(face_id.size(), 0);
  for (const auto& fs : faces)
    for (int f : fs) ++cover[f];

  std::vector<bool> alive(m, true);
  std::int64_t left = m;
  while (left > target) {
    std::int64_t pick = -1;
    for (std::int64_t i = 0; i < m && pick < 0; ++i) {
      if (!alive[i]) continue;
      if (std::all_of(faces[i].begin(), faces[i].end(), [&](int f) { return cover[f] >= 2; })) pick = i;
    }
    if (pick < 0) {
      out.status = ReduceResult::Status::Stalled;
      break;
    }
    alive[pick] = false;
    for (int f : faces[pick]) --cover[f];
    --left;
  }
  std::vector<Edge> kept;
  for (std::int64_t i = 0; i < m; ++i)
    if (alive[i]) kept.emplace_back(h.edge(i).begin(), h.edge(i).end());
  out.graph = Hypergraph(n, r, std::move(kept));
  out.removed = m - left;
  return out;
}

// ---------------------------------------------------------------- exact search

ExploreReport enumerate_free(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg, const Visitor& visit) {
  const EdgeSpace space(n, r);
  const auto* canon = detail::canonizer_for(n, r, cfg);
  detail::Budget budget(cfg);
  detail::Accumulator master;
  std::vector<std::vector<int>> frontier;
  {
    detail::SearchState st(space, f);
    frontier = detail::collect_frontier(st, canon, std::max(0, cfg.split_depth), budget, master, visit);
  }
  std::vector<detail::Accumulator> parts(frontier.size());
  parallel_for(frontier.size(), thread_count(cfg), [&](std::size_t i) {
    detail::SearchState st(space, f);
    restore(st, frontier[i]);
    detail::enumerate_subtree(st, canon, budget, parts[i], visit);
  });
  for (const auto& p : parts) master.merge(p);
  return master.finish(space, f, cfg);
}

ShadowQuery max_edges_given_shadow(int n, int r, const ForbiddenFamily& f, std::int64_t s, const SearchConfig& cfg) {
  const EdgeSpace space(n, r);
  const auto target = detail::make_target(n, r, s);
  const auto* canon = detail::canonizer_for(n, r, cfg);
  detail::Budget budget(cfg);
  detail::BoundBest master;
  std::vector<std::vector<int>> frontier;
  {
    detail::SearchState st(space, f);
    frontier = detail::bound_frontier(st, canon, target, std::max(0, cfg.split_depth), budget, master);
  }
  std::vector<detail::BoundBest> parts(frontier.size());
  parallel_for(frontier.size(), thread_count(cfg), [&](std::size_t i) {
    detail::SearchState st(space, f);
    restore(st, frontier[i]);
    detail::bound_subtree(st, canon, target, budget, parts[i]);
  });
  for (const auto& p : parts) master.merge(p);
  return detail::to_query(space, master);
}

// ---------------------------------------------------------------- sampling

namespace {

detail::Accumulator maximal_sample(const EdgeSpace& space, const ForbiddenFamily& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(space.size());
  for (int i = 0; i < space.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  detail::SearchState st(space, f);
  detail::Accumulator acc;
  // freeness is monotone, so one pass already yields a maximal graph
  for (int j : order) {
    if (st.admits(j))
      st.push(j);
    else
      ++acc.stats.pruned_family;
  }
  auto idx = st.indices();
  std::sort(idx.begin(), idx.end());
  acc.record(st.shadow(), st.size(), idx);
  ++acc.stats.visited;
  return acc;
}

double energy(const detail::SearchState& st, double faces, double edges, const SearchConfig& cfg) {
  const double dx = static_cast<double>(st.shadow()) / faces - cfg.target_x;
  const double dy = static_cast<double>(st.size()) / edges - cfg.target_y;
  return dx * dx + dy * dy;
}

detail::Accumulator anneal_chain(const EdgeSpace& space, const ForbiddenFamily& f, const SearchConfig& cfg,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, space.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double faces = static_cast<double>(space.face_count());
  const double edges = static_cast<double>(space.size());

  detail::SearchState st(space, f);
  detail::Accumulator acc;
  std::vector<int> pos(space.size(), -1);
  double cur = energy(st, faces, edges, cfg);
  double best = cur;
  std::vector<int> best_idx;
  std::int64_t best_shadow = 0;
  double temp = cfg.anneal_t0;

  for (int step = 0; step < cfg.anneal_steps; ++step, temp *= cfg.anneal_ratio) {
    ++acc.stats.visited;
    const int j = pick(rng);
    const bool present = pos[j] >= 0;
    if (present) {
      const std::size_t at = static_cast<std::size_t>(pos[j]);
      const int moved = st.indices().back();
      st.remove_at(at);
      if (moved != j) pos[moved] = static_cast<int>(at);
      pos[j] = -1;
    } else {
      if (!st.admits(j)) {
        ++acc.stats.pruned_family;
        continue;
      }
      pos[j] = static_cast<int>(st.size());
      st.push(j);
    }
    const double next = energy(st, faces, edges, cfg);
    const double delta = next - cur;
    const double u = unit(rng);
    if (delta <= 0.0 || (temp > 0.0 && u < std::exp(-delta / temp))) {
      cur = next;
      if (cur < best) {
        best = cur;
        best_idx = st.indices();
        best_shadow = st.shadow();
      }
      continue;
    }
    // undo
    if (present) {
      pos[j] = static_cast<int>(st.size());
      st.push(j);
    } else {
      st.pop();
      pos[j] = -1;
    }
  }
  std::sort(best_idx.begin(), best_idx.end());
  acc.record(best_shadow, static_cast<std::int64_t>(best_idx.size()), best_idx);
  return acc;
}

template <class Run>
ExploreReport run_samples(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg, Run&& run) {
  if (cfg.samples < 0) throw std::invalid_argument("sample count must be nonnegative");
  const EdgeSpace space(n, r);
  detail::SearchState probe(space, f);  // validates the family
  std::vector<detail::Accumulator> parts(static_cast<std::size_t>(cfg.samples));
  parallel_for(parts.size(), thread_count(cfg), [&](std::size_t i) {
    parts[i] = run(space, splitmix64(cfg.seed ^ static_cast<std::uint64_t>(i)));
  });
  detail::Accumulator all;
  for (const auto& p : parts) all.merge(p);
  return all.finish(space, f, cfg);
}

}  // namespace

ExploreReport sample_maximal(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg) {
  return run_samples(n, r, f, cfg,
                     [&](const EdgeSpace& space, std::uint64_t seed) { return maximal_sample(space, f, seed); });
}

std::vector<DensityPoint> random_maximal_free(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg) {
  if (cfg.samples < 0) throw std::invalid_argument("sample count must be nonnegative");
  const EdgeSpace space(n, r);
  detail::SearchState probe(space, f);
  std::vector<DensityPoint> out(static_cast<std::size_t>(cfg.samples));
  const double faces = static_cast<double>(space.face_count());
  const double edges = static_cast<double>(space.size());
  parallel_for(out.size(), thread_count(cfg), [&](std::size_t i) {
    const auto acc = maximal_sample(space, f, splitmix64(cfg.seed ^ static_cast<std::uint64_t>(i)));
    const auto& [key, count] = *acc.points.begin();
    out[i] = {static_cast<double>(key.first) / faces, static_cast<double>(key.second) / edges, n,
              "sample " + std::to_string(i)};
  });
  return out;
}

ExploreReport anneal(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg) {
  if (cfg.anneal_steps < 0 || !(cfg.anneal_ratio > 0.0 && cfg.anneal_ratio <= 1.0) || cfg.anneal_t0 < 0.0)
    throw std::invalid_argument("bad annealing schedule");
  return run_samples(n, r, f, cfg,
                     [&](const EdgeSpace& space, std::uint64_t seed) { return anneal_chain(space, f, cfg, seed); });
}

ExploreReport point_cloud(int n, int r, const ForbiddenFamily& f, const SearchConfig& cfg) {
  switch (cfg.mode) {
    case SearchConfig::Mode::ExactEnumerate: return enumerate_free(n, r, f, cfg);
    case SearchConfig::Mode::RandomMaximal: return sample_maximal(n, r, f, cfg);
    case SearchConfig::Mode::Anneal: return anneal(n, r, f, cfg);
    case SearchConfig::Mode::BranchBound: break;
  }
  const EdgeSpace space(n, r);
  ExploreReport rep;
  rep.family = f;
  rep.n = n;
  rep.r = r;
  rep.config = cfg;
  for (std::int64_t s = 0; s <= space.face_count(); ++s) {
    const auto q = max_edges_given_shadow(n, r, f, s, cfg);
    rep.stats.visited += q.stats.visited;
    rep.stats.pruned_family += q.stats.pruned_family;
    rep.stats.pruned_iso += q.stats.pruned_iso;
    rep.stats.pruned_bound += q.stats.pruned_bound;
    rep.stats.partial = rep.stats.partial || q.stats.partial;
    if (q.witness) {
      rep.points.push_back({s, q.max_edges, 1});
      rep.extremal.emplace(s, ExtremalEntry{q.max_edges, *q.witness});
    } else if (q.outcome == ShadowQuery::Outcome::Infeasible) {
      rep.infeasible.push_back(s);
    }
  }
  return rep;
}

}  // namespace shadowlab
