#include "shadowlab/families.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "shadowlab/detail/family_kernels.hpp"

namespace shadowlab {

using Kind = ForbiddenFamily::Kind;

ForbiddenFamily ForbiddenFamily::cancellative(int r) {
  if (r < 2) throw std::invalid_argument("cancellative family needs r >= 2");
  return {Kind::Cancellative, r, 0};
}

ForbiddenFamily ForbiddenFamily::covering_clique(int r, int l) {
  if (r < 2 || l < r) throw std::invalid_argument("covering-clique family needs l >= r >= 2");
  return {Kind::CoveringClique, r, l};
}

ForbiddenFamily ForbiddenFamily::expansion_clique(int r, int l) {
  if (r < 2 || l < r) throw std::invalid_argument("expansion family needs l >= r >= 2");
  return {Kind::ExpansionClique, r, l};
}

ForbiddenFamily ForbiddenFamily::discontinuity_d() { return {Kind::DiscontinuityD, 3, 0}; }

ForbiddenFamily ForbiddenFamily::discontinuity_dr(int r) {
  if (r < 3) throw std::invalid_argument("D^r family needs r >= 3");
  return {Kind::DiscontinuityDr, r, 0};
}

std::string ForbiddenFamily::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Cancellative: return "T:" + std::to_string(r);
    case Kind::CoveringClique: return "K:" + std::to_string(r) + ":" + std::to_string(l + 1);
    case Kind::ExpansionClique: return "H:" + std::to_string(r) + ":" + std::to_string(l + 1);
    case Kind::DiscontinuityD: return "D";
    case Kind::DiscontinuityDr: return "Dr:" + std::to_string(r);
  }
  return "?";
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? text.size() - start : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
    throw std::invalid_argument("bad integer '" + std::string(token) + "' in family '" + std::string(whole) + "'");
  return value;
}

}  // namespace

ForbiddenFamily ForbiddenFamily::parse(std::string_view text) {
  const auto parts = split(text, ':');
  const auto& tag = parts[0];
  auto arity = [&](std::size_t want) {
    if (parts.size() != want)
      throw std::invalid_argument("family '" + std::string(text) + "' expects " + std::to_string(want - 1) +
                                  " parameter(s)");
  };
  if (tag == "empty") {
    arity(1);
    return empty();
  }
  if (tag == "T") {
    arity(2);
    return cancellative(parse_int(parts[1], text));
  }
  if (tag == "K") {
    arity(3);
    return covering_clique(parse_int(parts[1], text), parse_int(parts[2], text) - 1);
  }
  if (tag == "H") {
    arity(3);
    return expansion_clique(parse_int(parts[1], text), parse_int(parts[2], text) - 1);
  }
  if (tag == "D") {
    arity(1);
    return discontinuity_d();
  }
  if (tag == "Dr") {
    arity(2);
    return discontinuity_dr(parse_int(parts[1], text));
  }
  throw std::invalid_argument("unknown family tag '" + std::string(tag) + "'");
}

namespace {

template <class M>
std::vector<M> masks_of(const Hypergraph& h) {
  if constexpr (std::is_same_v<M, Mask>)
    return h.masks();
  else
    return h.wide_masks();
}

Edge edge_of(const Hypergraph& h, int i) {
  auto e = h.edge(static_cast<std::size_t>(i));
  return Edge(e.begin(), e.end());
}

std::vector<Vertex> to_vertex_list(const std::vector<int>& v) { return {v.begin(), v.end()}; }

template <class F>
Detection with_masks(const Hypergraph& h, F&& body) {
  if (h.n() <= kMaxMaskVertices) {
    const auto m = masks_of<Mask>(h);
    return body(std::span<const Mask>(m));
  }
  const auto m = masks_of<WideMask>(h);
  return body(std::span<const WideMask>(m));
}

Detection from_core_hit(const Hypergraph& h, Kind kind, const std::optional<detail::CoreHit>& hit) {
  if (!hit) return {};
  Witness w{kind, to_vertex_list(hit->core), {}};
  for (int k : hit->edges) w.edges.push_back(edge_of(h, k));
  return {false, std::move(w)};
}

}  // namespace

Detection is_cancellative(const Hypergraph& h) {
  if (h.r() < 2) throw std::invalid_argument("cancellativity needs r >= 2");
  return with_masks(h, [&](auto edges) -> Detection {
    using M = typename decltype(edges)::value_type;
    auto hit = detail::find_cancellative_triple<M>(edges, h.n(), h.r());
    if (!hit) return {};
    Witness w{Kind::Cancellative, {}, {}};
    std::set<Vertex> span;
    for (int k : *hit) {
      w.edges.push_back(edge_of(h, k));
      span.insert(w.edges.back().begin(), w.edges.back().end());
    }
    w.vertices.assign(span.begin(), span.end());
    return {false, std::move(w)};
  });
}

Detection covering_clique_free(const Hypergraph& h, int l) {
  if (h.r() < 2 || l < h.r()) throw std::invalid_argument("covering clique needs l >= r >= 2");
  if (h.n() < l + 1) return {};
  return with_masks(h, [&](auto edges) -> Detection {
    using M = typename decltype(edges)::value_type;
    const auto adj = detail::coverage_graph<M>(edges, h.n());
    std::vector<int> stack;
    std::vector<int> core;
    detail::for_each_clique(adj, detail::active_vertices(adj, h.n()), l + 1, stack,
                            [&](const std::vector<int>& c) {
                              core = c;
                              return true;
                            });
    if (core.empty()) return {};
    Witness w{Kind::CoveringClique, to_vertex_list(core), {}};
    std::vector<int> picked;
    for (std::size_t i = 0; i < core.size(); ++i) {
      for (std::size_t j = i + 1; j < core.size(); ++j) {
        const M p = detail::pair_mask<M>(h.n(), core[i], core[j]);
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (bits::subset(p, edges[k])) {
            if (std::find(picked.begin(), picked.end(), static_cast<int>(k)) == picked.end())
              picked.push_back(static_cast<int>(k));
            break;
          }
        }
      }
    }
    for (int k : picked) w.edges.push_back(edge_of(h, k));
    return {false, std::move(w)};
  });
}

Detection expansion_free(const Hypergraph& h, int l) {
  if (h.r() < 2 || l < h.r()) throw std::invalid_argument("expansion needs l >= r >= 2");
  return with_masks(h, [&](auto edges) -> Detection {
    using M = typename decltype(edges)::value_type;
    return from_core_hit(h, Kind::ExpansionClique, detail::find_expansion<M>(edges, h.n(), h.r(), l));
  });
}

Detection dr_family_free(const Hypergraph& h, int r) {
  if (r < 3) throw std::invalid_argument("D^r needs r >= 3");
  if (h.r() != r) throw std::invalid_argument("D^r uniformity does not match the hypergraph");
  return with_masks(h, [&](auto edges) -> Detection {
    using M = typename decltype(edges)::value_type;
    return from_core_hit(h, Kind::DiscontinuityDr, detail::find_d_member<M>(edges, h.n(), r));
  });
}

Detection d_family_free(const Hypergraph& h) {
  if (h.r() != 3) throw std::invalid_argument("family D is defined for 3-graphs only");
  auto d = dr_family_free(h, 3);
  if (d.witness) d.witness->kind = Kind::DiscontinuityD;
  return d;
}

Detection is_free(const Hypergraph& h, const ForbiddenFamily& f) {
  if (f.kind != Kind::Empty && f.r != h.r())
    throw std::invalid_argument("family " + f.to_string() + " does not match uniformity " + std::to_string(h.r()));
  switch (f.kind) {
    case Kind::Empty: return {};
    case Kind::Cancellative: return is_cancellative(h);
    case Kind::CoveringClique: return covering_clique_free(h, f.l);
    case Kind::ExpansionClique: return expansion_free(h, f.l);
    case Kind::DiscontinuityD: return d_family_free(h);
    case Kind::DiscontinuityDr: return dr_family_free(h, f.r);
  }
  return {};
}

// Witness replay works on plain sorted vertex lists.
namespace {

bool has_all(const Edge& outer, const std::vector<Vertex>& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool edges_in_host(const Hypergraph& h, const std::vector<Edge>& edges) {
  for (const auto& e : edges) {
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (!h.contains(sorted)) return false;
  }
  return true;
}

bool covers_core(const std::vector<Vertex>& core, const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = i + 1; j < core.size(); ++j) {
      const std::vector<Vertex> pair{core[i], core[j]};
      if (std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return has_all(e, pair); })) return false;
    }
  return true;
}

bool distinct_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

}  // namespace

bool verify_witness(const Hypergraph& h, const ForbiddenFamily& f, const Witness& w) {
  auto edges = w.edges;
  for (auto& e : edges) std::sort(e.begin(), e.end());
  if (!edges_in_host(h, edges) || !distinct_edges(edges)) return false;
  std::vector<Vertex> core = w.vertices;
  std::sort(core.begin(), core.end());
  core.erase(std::unique(core.begin(), core.end()), core.end());
  switch (f.kind) {
    case Kind::Empty: return false;
    case Kind::Cancellative: {
      if (edges.size() != 3) return false;
      std::vector<Vertex> diff;
      std::set_symmetric_difference(edges[0].begin(), edges[0].end(), edges[1].begin(), edges[1].end(),
                                    std::back_inserter(diff));
      return !diff.empty() && has_all(edges[2], diff);
    }
    case Kind::CoveringClique: {
      const auto limit = static_cast<std::size_t>((f.l + 1) * f.l / 2);
      return core.size() == static_cast<std::size_t>(f.l + 1) && edges.size() <= limit && covers_core(core, edges);
    }
    case Kind::ExpansionClique: {
      if (core.size() != static_cast<std::size_t>(f.l + 1)) return false;
      if (edges.size() != core.size() * (core.size() - 1) / 2) return false;
      std::set<Vertex> used(core.begin(), core.end());
      std::size_t k = 0;
      for (std::size_t i = 0; i < core.size(); ++i)
        for (std::size_t j = i + 1; j < core.size(); ++j, ++k) {
          const auto& e = edges[k];
          if (!has_all(e, {core[i], core[j]})) return false;
          for (auto v : e) {
            if (v == core[i] || v == core[j]) continue;
            if (!used.insert(v).second) return false;
          }
        }
      return true;
    }
    case Kind::DiscontinuityD:
    case Kind::DiscontinuityDr: {
      const auto size = static_cast<std::size_t>(f.r + 1);
      if (core.size() != size || edges.size() > size * (size - 1) / 2) return false;
      if (!covers_core(core, edges)) return false;
      std::vector<Vertex> common = edges.front();
      for (const auto& e : edges) {
        std::vector<Vertex> next;
        std::set_intersection(common.begin(), common.end(), e.begin(), e.end(), std::back_inserter(next));
        common = std::move(next);
      }
      return common.empty();
    }
  }
  return false;
}

std::string witness_json(const Witness& w, const ForbiddenFamily& f) {
  nlohmann::ordered_json j;
  j["family"] = f.to_string();
  j["vertices"] = w.vertices;
  j["edges"] = w.edges;
  return j.dump();
}

}  // namespace shadowlab
