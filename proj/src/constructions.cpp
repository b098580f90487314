#include "shadowlab/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "shadowlab/combinatorics.hpp"

namespace shadowlab {

std::vector<int> apportion(int n, const std::vector<double>& weights) {
  if (n < 0) throw std::invalid_argument("apportion needs n >= 0");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<int> sizes(weights.size(), 0);
  if (weights.empty() || total <= 0.0) return sizes;
  std::vector<double> remainder(weights.size());
  int assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0) throw std::invalid_argument("apportion weights must be nonnegative");
    const double quota = n * weights[i] / total;
    // guard against quotas like 2.9999999 from rounded weights
    const double fl = std::floor(quota + 1e-9);
    sizes[i] = static_cast<int>(fl);
    remainder[i] = std::max(0.0, quota - fl);
    assigned += sizes[i];
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b] + 1e-12;
  });
  for (std::size_t t = 0; assigned < n; t = (t + 1) % order.size()) {
    if (weights[order[t]] <= 0.0) continue;
    ++sizes[order[t]];
    ++assigned;
  }
  while (assigned > n) {
    // only reachable through the 1e-9 nudge; take back from the largest class
    auto it = std::max_element(sizes.begin(), sizes.end());
    --*it;
    --assigned;
  }
  return sizes;
}

namespace {

std::vector<int> class_starts(const std::vector<int>& sizes) {
  std::vector<int> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
  return start;
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

Hypergraph turan(int n, int r, int l) {
  if (r < 2 || l < r) throw std::invalid_argument("turan needs l >= r >= 2");
  if (n < 0) throw std::invalid_argument("turan needs n >= 0");
  const auto sizes = apportion(n, std::vector<double>(l, 1.0));
  const auto start = class_starts(sizes);
  std::vector<Edge> edges;
  for_each_combination(iota_vec(l), r, [&](const std::vector<int>& parts) {
    // odometer over the chosen parts
    std::vector<int> pos(r, 0);
    for (int p : parts)
      if (sizes[p] == 0) return;
    while (true) {
      Edge e(r);
      for (int t = 0; t < r; ++t) e[t] = static_cast<Vertex>(start[parts[t]] + pos[t]);
      edges.push_back(std::move(e));
      int t = r - 1;
      while (t >= 0 && ++pos[t] == sizes[parts[t]]) pos[t--] = 0;
      if (t < 0) break;
    }
  });
  return Hypergraph(n, r, std::move(edges));
}

std::int64_t turan_edge_count(int n, int r, int l) {
  const auto sizes = apportion(n, std::vector<double>(l, 1.0));
  std::int64_t total = 0;
  for_each_combination(iota_vec(l), r, [&](const std::vector<int>& parts) {
    std::int64_t prod = 1;
    for (int p : parts) prod *= sizes[p];
    total += prod;
  });
  return total;
}

Hypergraph star(int n, int r) {
  if (r < 2 || n < r) throw std::invalid_argument("star needs n >= r >= 2");
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<Edge> edges;
  for_each_combination(rest, r - 1, [&](const std::vector<int>& c) {
    Edge e{0};
    e.insert(e.end(), c.begin(), c.end());
    edges.push_back(std::move(e));
  });
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph complete(int n, int r) {
  if (r < 1 || n < 0) throw std::invalid_argument("complete needs r >= 1, n >= 0");
  std::vector<Edge> edges;
  for_each_combination(iota_vec(n), r, [&](const std::vector<int>& c) { edges.emplace_back(c.begin(), c.end()); });
  return Hypergraph(n, r, std::move(edges));
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
}

Hypergraph pad(const Hypergraph& h, int n) { return Hypergraph(n, h.r(), h.edges()); }

}  // namespace

Hypergraph clique_plus_isolated(int n, int r, double alpha) {
  check_alpha(alpha);
  const int m = static_cast<int>(std::lround(alpha * n));
  return pad(complete(m, r), n);
}

Hypergraph turan_plus_isolated(int n, int r, int l, double alpha) {
  check_alpha(alpha);
  const int m = static_cast<int>(std::lround(alpha * n));
  return pad(turan(m, r, l), n);
}

Hypergraph steiner_triple_system(int k) {
  if (k < 3 || (k % 6 != 1 && k % 6 != 3))
    throw std::invalid_argument("a Steiner triple system on k points needs k = 1 or 3 (mod 6), k >= 3");
  std::vector<Edge> edges;
  auto tri = [&](int a, int b, int c) { edges.push_back({Vertex(a), Vertex(b), Vertex(c)}); };
  if (k % 6 == 3) {
    // Bose: idempotent commutative quasigroup on Z_q, q = 2t + 1; points (x, i) -> x + q i.
    const int q = k / 3;
    const int half = (q + 1) / 2;  // inverse of 2 mod q
    auto op = [&](int x, int y) { return ((x + y) % q) * half % q; };
    auto pt = [&](int x, int i) { return x + q * (i % 3); };
    for (int x = 0; x < q; ++x) tri(pt(x, 0), pt(x, 1), pt(x, 2));
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y) tri(pt(x, i), pt(y, i), pt(op(x, y), i + 1));
  } else {
    // Skolem: half-idempotent commutative quasigroup on Z_{2t}; infinity is k - 1.
    const int q = (k - 1) / 3;
    const int t = q / 2;
    auto op = [&](int x, int y) {
      const int s = (x + y) % q;
      return s % 2 == 0 ? s / 2 : t + s / 2;
    };
    auto pt = [&](int x, int i) { return x + q * (i % 3); };
    const int inf = k - 1;
    for (int x = 0; x < t; ++x) tri(pt(x, 0), pt(x, 1), pt(x, 2));
    for (int x = 0; x < t; ++x)
      for (int i = 0; i < 3; ++i) tri(inf, pt(x + t, i), pt(x, i + 1));
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y) tri(pt(x, i), pt(y, i), pt(op(x, y), i + 1));
  }
  return Hypergraph(k, 3, std::move(edges));
}

Hypergraph blow_up(const Hypergraph& base, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != base.n())
    throw std::invalid_argument("blow_up needs one class size per base vertex");
  for (int s : sizes)
    if (s < 0) throw std::invalid_argument("blow_up class sizes must be nonnegative");
  const auto start = class_starts(sizes);
  const int r = base.r();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto e = base.edge(i);
    bool empty_class = false;
    for (auto v : e) empty_class |= sizes[v] == 0;
    if (empty_class) continue;
    std::vector<int> pos(r, 0);
    while (true) {
      Edge out(r);
      for (int t = 0; t < r; ++t) out[t] = static_cast<Vertex>(start[e[t]] + pos[t]);
      edges.push_back(std::move(out));
      int t = r - 1;
      while (t >= 0 && ++pos[t] == sizes[e[t]]) pos[t--] = 0;
      if (t < 0) break;
    }
  }
  return Hypergraph(start.back(), r, std::move(edges));
}

Hypergraph sts_blowup(int n, int k) {
  const auto base = steiner_triple_system(k);
  return blow_up(base, apportion(n, std::vector<double>(k, 1.0)));
}

Hypergraph fano_plane() {
  return Hypergraph(7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {0, 6, 3}, {1, 6, 4}, {2, 6, 5}, {1, 3, 5}});
}

Hypergraph fano_blowup(int n, double alpha) {
  if (!(alpha >= 1.0 / 7 - 1e-12 && alpha <= 1.0 / 3 + 1e-12))
    throw std::invalid_argument("fano blow-up needs alpha in [1/7, 1/3]");
  const double beta = std::max(0.0, (1.0 - 3.0 * alpha) / 4.0);
  return blow_up(fano_plane(), apportion(n, {alpha, alpha, alpha, beta, beta, beta, beta}));
}

Hypergraph expansion(int r, int l) {
  if (r < 2 || l < r) throw std::invalid_argument("expansion needs l >= r >= 2");
  int next = l + 1;
  std::vector<Edge> edges;
  for (int i = 0; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      Edge e{Vertex(i), Vertex(j)};
      for (int t = 0; t < r - 2; ++t) e.push_back(static_cast<Vertex>(next++));
      edges.push_back(std::move(e));
    }
  return Hypergraph(next, r, std::move(edges));
}

// ---------------------------------------------------------------- parsing

namespace {

struct Fields {
  std::string_view text;
  std::vector<std::string_view> parts;

  void arity(std::size_t want) const {
    if (parts.size() != want) {
      std::ostringstream os;
      os << "construction '" << text << "' expects " << want - 1 << " field(s) after the tag, got "
         << parts.size() - 1;
      throw std::invalid_argument(os.str());
    }
  }

  [[noreturn]] void fail(std::size_t i, const char* what) const {
    std::ostringstream os;
    os << "field " << i << " ('" << parts[i] << "') of '" << text << "' is not " << what;
    throw std::invalid_argument(os.str());
  }

  int integer(std::size_t i) const {
    int v = 0;
    const auto tok = parts[i];
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) fail(i, "an integer");
    return v;
  }

  // accepts decimals and p/q fractions
  double real(std::size_t i) const {
    const auto tok = parts[i];
    const auto slash = tok.find('/');
    auto parse = [&](std::string_view s) {
      double v = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) fail(i, "a real number");
      return v;
    };
    if (slash == std::string_view::npos) return parse(tok);
    const double den = parse(tok.substr(slash + 1));
    if (den == 0.0) fail(i, "a fraction with nonzero denominator");
    return parse(tok.substr(0, slash)) / den;
  }
};

}  // namespace

ConstructionSpec ConstructionSpec::parse(std::string_view text) {
  Fields f{text, {}};
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    f.parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  const auto tag = f.parts[0];
  ConstructionSpec s;
  if (tag == "turan") {
    f.arity(4);
    s = {Kind::Turan, f.integer(1), f.integer(2), f.integer(3), 0, 1.0};
  } else if (tag == "star") {
    f.arity(3);
    s = {Kind::Star, f.integer(1), f.integer(2), 0, 0, 1.0};
  } else if (tag == "complete") {
    f.arity(3);
    s = {Kind::Complete, f.integer(1), f.integer(2), 0, 0, 1.0};
  } else if (tag == "clique+iso") {
    f.arity(4);
    s = {Kind::CliquePlusIsolated, f.integer(1), f.integer(2), 0, 0, f.real(3)};
  } else if (tag == "turan+iso") {
    f.arity(5);
    s = {Kind::TuranPlusIsolated, f.integer(1), f.integer(2), f.integer(3), 0, f.real(4)};
  } else if (tag == "sts") {
    f.arity(2);
    s = {Kind::Sts, 0, 3, 0, f.integer(1), 1.0};
    s.n = s.k;
  } else if (tag == "sts-blowup") {
    f.arity(3);
    s = {Kind::StsBlowup, f.integer(1), 3, 0, f.integer(2), 1.0};
  } else if (tag == "fano-blowup") {
    f.arity(3);
    s = {Kind::FanoBlowup, f.integer(1), 3, 0, 7, f.real(2)};
  } else if (tag == "expansion") {
    f.arity(3);
    s = {Kind::Expansion, 0, f.integer(1), f.integer(2) - 1, 0, 1.0};
  } else {
    throw std::invalid_argument("unknown construction '" + std::string(tag) +
                                "' (field 0 of '" + std::string(text) + "')");
  }
  return s;
}

std::string ConstructionSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Turan: os << "turan:" << n << ':' << r << ':' << l; break;
    case Kind::Star: os << "star:" << n << ':' << r; break;
    case Kind::Complete: os << "complete:" << n << ':' << r; break;
    case Kind::CliquePlusIsolated: os << "clique+iso:" << n << ':' << r << ':' << alpha; break;
    case Kind::TuranPlusIsolated: os << "turan+iso:" << n << ':' << r << ':' << l << ':' << alpha; break;
    case Kind::Sts: os << "sts:" << k; break;
    case Kind::StsBlowup: os << "sts-blowup:" << n << ':' << k; break;
    case Kind::FanoBlowup: os << "fano-blowup:" << n << ':' << alpha; break;
    case Kind::Expansion: os << "expansion:" << r << ':' << l + 1; break;
  }
  return os.str();
}

Hypergraph build(const ConstructionSpec& s) {
  using K = ConstructionSpec::Kind;
  switch (s.kind) {
    case K::Turan: return turan(s.n, s.r, s.l);
    case K::Star: return star(s.n, s.r);
    case K::Complete: return complete(s.n, s.r);
    case K::CliquePlusIsolated: return clique_plus_isolated(s.n, s.r, s.alpha);
    case K::TuranPlusIsolated: return turan_plus_isolated(s.n, s.r, s.l, s.alpha);
    case K::Sts: return steiner_triple_system(s.k);
    case K::StsBlowup: return sts_blowup(s.n, s.k);
    case K::FanoBlowup: return fano_blowup(s.n, s.alpha);
    case K::Expansion: return expansion(s.r, s.l);
  }
  throw std::logic_error("unhandled construction kind");
}

}  // namespace shadowlab
