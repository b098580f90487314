#include "shadowlab/bounds.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "shadowlab/combinatorics.hpp"
#include "shadowlab/families.hpp"

namespace shadowlab {

namespace {

constexpr double kDomainSlack = 1e-12;

double clamp_domain(double x, double lo, double hi, const char* name) {
  if (!(x >= lo - kDomainSlack && x <= hi + kDomainSlack)) {
    std::ostringstream os;
    os << name << ": x = " << x << " outside [" << lo << ", " << hi << "]";
    throw std::domain_error(os.str());
  }
  return std::min(std::max(x, lo), hi);
}

bool admissible_k(int k) { return k >= 7 && (k % 6 == 1 || k % 6 == 3); }

}  // namespace

double curve_universal(double x, int r) {
  if (r < 3) throw std::domain_error("universal curve needs r >= 3");
  x = clamp_domain(x, 0.0, 1.0, "universal");
  return std::pow(x, static_cast<double>(r) / (r - 1));
}

double curve_cancellative_left(double x, int r) {
  if (r < 2) throw std::domain_error("cancellative-left needs r >= 2");
  x = clamp_domain(x, 0.0, 1.0, "cancellative-left");
  return std::pow(std::pow(x, r) / std::tgamma(r + 1.0), 1.0 / (r - 1));
}

double curve_cancellative_right(double x) {
  x = clamp_domain(x, 0.0, 1.0, "cancellative-right");
  return x * (1.0 - x);
}

double curve_prior_cancellative(double x) {
  if (!(x > 1.0 / 3.0)) throw std::domain_error("prior-cancellative is undefined for x <= 1/3");
  x = clamp_domain(x, 1.0 / 3.0, 1.0, "prior-cancellative");
  return (std::sqrt(2.0 * (1.0 - x) * x * x * x) + x * x - x) / (3.0 * x - 1.0);
}

double curve_covering_clique(double x, int r, int l) {
  if (r < 2 || l < r) throw std::domain_error("covering-clique curve needs l >= r >= 2");
  const double hi = falling_factorial(l, r - 1) / std::pow(static_cast<double>(l), r - 1);
  x = clamp_domain(x, 0.0, hi, "covering-clique");
  return (l - r + 1) * std::pow(std::pow(x, r) / falling_factorial(l, r), 1.0 / (r - 1));
}

double curve_fano_lower(double x) {
  x = clamp_domain(x, 2.0 / 3.0, 6.0 / 7.0, "fano-lower");
  const double a = std::max(0.0, 18.0 * x * x - 21.0 * x * x * x);
  const double b = std::max(0.0, 18.0 - 21.0 * x);
  return (-70.0 * std::sqrt(a) + 63.0 * x + 60.0 * std::sqrt(b) - 36.0) / 147.0;
}

double curve_general_k_lower(double x, int k) {
  if (!admissible_k(k)) throw std::domain_error("general-k curve needs k >= 7 with k = 1 or 3 (mod 6)");
  x = clamp_domain(x, 2.0 / 3.0, (k - 1.0) / k, "general-k");
  const double kk = k;
  const double t = std::max(0.0, kk - 1.0 - kk * x);
  return 2.0 * std::sqrt(3.0) * (kk + 3.0) * std::pow(t, 1.5) / (3.0 * kk * kk * std::sqrt(kk - 3.0)) +
         (3.0 * kk * x - 2.0 * kk + 2.0) / (kk * kk);
}

std::pair<double, double> fano_parametric(double alpha) {
  if (!(alpha >= 1.0 / 7 - kDomainSlack && alpha <= 1.0 / 3 + kDomainSlack))
    throw std::domain_error("fano parameter alpha must lie in [1/7, 1/3]");
  const double x = 0.75 * (1.0 + 2.0 * alpha - 7.0 * alpha * alpha);
  const double y = 0.75 * alpha * (3.0 - 18.0 * alpha + 35.0 * alpha * alpha);
  return {x, y};
}

// ---------------------------------------------------------------- CurveId

CurveId CurveId::universal(int r) {
  if (r < 3) throw std::invalid_argument("universal curve needs r >= 3");
  return {Kind::UniversalKK, r, 0, 0};
}
CurveId CurveId::cancellative_left(int r) {
  if (r < 2) throw std::invalid_argument("cancellative-left needs r >= 2");
  return {Kind::CancellativeLeft, r, 0, 0};
}
CurveId CurveId::cancellative_right() { return {Kind::CancellativeRightT3, 3, 0, 0}; }
CurveId CurveId::prior_cancellative() { return {Kind::PriorCancellativeT3, 3, 0, 0}; }
CurveId CurveId::covering_clique(int r, int l) {
  if (r < 2 || l < r) throw std::invalid_argument("covering-clique curve needs l >= r >= 2");
  return {Kind::CoveringCliqueG, r, l, 0};
}
CurveId CurveId::fano_lower() { return {Kind::FanoLower, 3, 0, 7}; }
CurveId CurveId::general_k_lower(int k) {
  if (!admissible_k(k)) throw std::invalid_argument("general-k curve needs k >= 7 with k = 1 or 3 (mod 6)");
  return {Kind::GeneralKLower, 3, 0, k};
}

std::pair<double, double> CurveId::domain() const {
  switch (kind) {
    case Kind::UniversalKK:
    case Kind::CancellativeLeft:
    case Kind::CancellativeRightT3: return {0.0, 1.0};
    case Kind::PriorCancellativeT3: return {1.0 / 3.0, 1.0};
    case Kind::CoveringCliqueG: return {0.0, falling_factorial(l, r - 1) / std::pow(static_cast<double>(l), r - 1)};
    case Kind::FanoLower: return {2.0 / 3.0, 6.0 / 7.0};
    case Kind::GeneralKLower: return {2.0 / 3.0, (k - 1.0) / k};
  }
  return {0.0, 1.0};
}

double CurveId::operator()(double x) const {
  switch (kind) {
    case Kind::UniversalKK: return curve_universal(x, r);
    case Kind::CancellativeLeft: return curve_cancellative_left(x, r);
    case Kind::CancellativeRightT3: return curve_cancellative_right(x);
    case Kind::PriorCancellativeT3: return curve_prior_cancellative(x);
    case Kind::CoveringCliqueG: return curve_covering_clique(x, r, l);
    case Kind::FanoLower: return curve_fano_lower(x);
    case Kind::GeneralKLower: return curve_general_k_lower(x, k);
  }
  throw std::logic_error("unhandled curve kind");
}

std::string CurveId::to_string() const {
  switch (kind) {
    case Kind::UniversalKK: return "universal:" + std::to_string(r);
    case Kind::CancellativeLeft: return "cancellative-left:" + std::to_string(r);
    case Kind::CancellativeRightT3: return "cancellative-right";
    case Kind::PriorCancellativeT3: return "prior-cancellative";
    case Kind::CoveringCliqueG: return "covering-clique:" + std::to_string(r) + ":" + std::to_string(l);
    case Kind::FanoLower: return "fano-lower";
    case Kind::GeneralKLower: return "general-k:" + std::to_string(k);
  }
  return "?";
}

CurveId CurveId::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  auto need = [&](std::size_t n) {
    if (parts.size() != n) throw std::invalid_argument("curve '" + std::string(text) + "' has wrong parameter count");
  };
  auto num = [&](std::size_t i) {
    int v = 0;
    const auto tok = parts[i];
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad integer '" + std::string(tok) + "' in curve '" + std::string(text) + "'");
    return v;
  };
  const auto tag = parts[0];
  if (tag == "universal") return need(2), universal(num(1));
  if (tag == "cancellative-left") return need(2), cancellative_left(num(1));
  if (tag == "cancellative-right") return need(1), cancellative_right();
  if (tag == "prior-cancellative") return need(1), prior_cancellative();
  if (tag == "covering-clique") return need(3), covering_clique(num(1), num(2));
  if (tag == "fano-lower") return need(1), fano_lower();
  if (tag == "general-k") return need(2), general_k_lower(num(1));
  throw std::invalid_argument("unknown curve id '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- finite n

double kruskal_katona_max_edges(std::int64_t shadow_size, int r, int n) {
  if (r < 2 || n < r) throw std::invalid_argument("Kruskal-Katona bound needs n >= r >= 2");
  if (shadow_size < 0) throw std::invalid_argument("shadow size must be nonnegative");
  if (shadow_size > binomial(n, r - 1)) throw std::invalid_argument("shadow size exceeds C(n, r-1)");
  if (shadow_size == 0) return 0.0;
  const double target = static_cast<double>(shadow_size);
  double lo = r - 1;
  double hi = std::max(n, r);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (generalized_binomial(mid, r - 1) < target)
      lo = mid;
    else
      hi = mid;
  }
  // hi sits on the feasible side, so the result never undershoots
  return generalized_binomial(hi, r);
}

ChainResult check_fisher_ryan_chain(const Hypergraph& h, int l) {
  const int r = h.r();
  if (r < 2 || l < r) throw std::invalid_argument("chain needs l >= r >= 2");
  if (auto d = covering_clique_free(h, l); !d.free)
    throw std::invalid_argument("hypergraph contains a covering (l+1)-clique; the chain does not apply");
  ChainResult out;
  for (int i = r - l; i <= r - 1; ++i) {
    const int k = r - i;
    const std::int64_t size = (k > h.n()) ? 0 : static_cast<std::int64_t>(shadow(h, i).size());
    out.sizes.push_back(size);
    out.values.push_back(std::pow(static_cast<double>(size) / static_cast<double>(binomial(l, k)), 1.0 / k));
  }
  for (std::size_t j = 0; j + 1 < out.values.size(); ++j) {
    const double a = out.values[j], b = out.values[j + 1];
    if (a > b + 1e-12 * std::max(1.0, std::abs(b))) out.non_decreasing = false;
  }
  return out;
}

bool cancellative_power_bound_holds(std::int64_t edges, std::int64_t shadow_size, int r) {
  using boost::multiprecision::cpp_int;
  cpp_int lhs = boost::multiprecision::pow(cpp_int(edges), r - 1) * boost::multiprecision::pow(cpp_int(r), r);
  cpp_int rhs = boost::multiprecision::pow(cpp_int(shadow_size), r);
  return lhs <= rhs;
}

bool cancellative_quadratic_bound_holds(std::int64_t edges, std::int64_t shadow_size, int n) {
  using boost::multiprecision::cpp_int;
  const cpp_int nn = n;
  const cpp_int lhs = 3 * nn * edges;
  const cpp_int rhs = (nn * nn - 2 * cpp_int(shadow_size)) * shadow_size + 9 * nn * nn * nn;
  return lhs <= rhs;
}

std::vector<BoundReport> check_cancellative_inequalities(const Hypergraph& h) {
  if (auto d = is_cancellative(h); !d.free)
    throw std::invalid_argument("hypergraph is not cancellative");
  const int n = h.n(), r = h.r();
  const auto m = static_cast<std::int64_t>(h.size());
  const auto s = static_cast<std::int64_t>(shadow(h, 1).size());
  const double total = (n >= r) ? static_cast<double>(binomial(n, r)) : 1.0;
  const DensityPoint p = density_point(h, "input");

  std::vector<BoundReport> out;
  BoundReport power{p, CurveId::cancellative_left(r), "|H| <= (|dH|/r)^(r/(r-1))", static_cast<double>(m),
                    std::pow(static_cast<double>(s) / r, static_cast<double>(r) / (r - 1)), 0.0,
                    cancellative_power_bound_holds(m, s, r)};
  power.slack = (power.rhs - power.lhs) / total;
  out.push_back(power);
  if (r == 3) {
    const double nd = n;
    BoundReport quad{p, CurveId::cancellative_right(), "|H| <= (n^2 - 2|dH|)|dH|/(3n) + 3n^2",
                     static_cast<double>(m),
                     n > 0 ? (nd * nd - 2.0 * s) * s / (3.0 * nd) + 3.0 * nd * nd : 0.0, 0.0,
                     cancellative_quadratic_bound_holds(m, s, n)};
    quad.slack = (quad.rhs - quad.lhs) / total;
    out.push_back(quad);
  }
  return out;
}

}  // namespace shadowlab
