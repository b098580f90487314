#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// A boundary curve y = f(x) of a feasible region, or a lower-bound curve.
struct CurveId {
  enum class Kind {
    UniversalKK,          // x^{r/(r-1)}
    CancellativeLeft,     // (x^r / r!)^{1/(r-1)}
    CancellativeRightT3,  // x (1 - x)
    PriorCancellativeT3,  // (sqrt(2(1-x)x^3) + x^2 - x) / (3x - 1)
    CoveringCliqueG,      // (l - r + 1) (x^r / (l)_r)^{1/(r-1)}
    FanoLower,            // Fano blow-up lower bound on [2/3, 6/7]
    GeneralKLower,        // STS(k) analogue on [2/3, (k-1)/k]
  };

  Kind kind = Kind::UniversalKK;
  int r = 3;
  int l = 0;
  int k = 0;

  static CurveId universal(int r);
  static CurveId cancellative_left(int r);
  static CurveId cancellative_right();
  static CurveId prior_cancellative();
  static CurveId covering_clique(int r, int l);
  static CurveId fano_lower();
  static CurveId general_k_lower(int k);

  /// "universal:r", "cancellative-left:r", "cancellative-right",
  /// "prior-cancellative", "covering-clique:r:l", "fano-lower", "general-k:k".
  static CurveId parse(std::string_view text);
  std::string to_string() const;

  /// Closed domain [lo, hi]; PriorCancellativeT3 excludes lo = 1/3.
  std::pair<double, double> domain() const;
  bool open_at_lower() const { return kind == Kind::PriorCancellativeT3; }

  /// Throws std::domain_error outside the domain.
  double operator()(double x) const;
};

double curve_universal(double x, int r);
double curve_cancellative_left(double x, int r);
double curve_cancellative_right(double x);
double curve_prior_cancellative(double x);
double curve_covering_clique(double x, int r, int l);
double curve_fano_lower(double x);
double curve_general_k_lower(double x, int k);

/// Limit densities of the Fano blow-up at parameter alpha in [1/7, 1/3].
std::pair<double, double> fano_parametric(double alpha);

/// Largest |H| allowed by Lovasz's Kruskal-Katona form for a given shadow
/// size: solve C(z, r-1) = s by bisection and return C(z, r).
double kruskal_katona_max_edges(std::int64_t shadow_size, int r, int n);

struct ChainResult {
  std::vector<double> values;  // i = r - l, ..., r - 1
  std::vector<std::int64_t> sizes;
  bool non_decreasing = true;
};

/// Shadow chain (|d_i H| / C(l, r-i))^{1/(r-i)} for a K^r_{l+1}-free H.
/// Throws std::invalid_argument if H contains a covering (l+1)-clique.
ChainResult check_fisher_ryan_chain(const Hypergraph& h, int l);

struct BoundReport {
  DensityPoint point;
  CurveId curve;
  std::string inequality;
  double lhs = 0.0;  // |H|
  double rhs = 0.0;  // bound on |H|
  double slack = 0.0;  // (rhs - lhs) / C(n, r), in edge-density units
  bool satisfied = true;
};

/// |H| <= (|dH| / r)^{r/(r-1)} for every r; for r = 3 also
/// |H| <= (n^2 - 2|dH|)|dH| / (3n) + 3n^2. Both decided in exact integers.
/// Throws std::invalid_argument if H is not cancellative.
std::vector<BoundReport> check_cancellative_inequalities(const Hypergraph& h);

/// Exact test of m^{r-1} r^r <= s^r.
bool cancellative_power_bound_holds(std::int64_t edges, std::int64_t shadow, int r);
/// Exact test of 3n m <= (n^2 - 2s) s + 9 n^3.
bool cancellative_quadratic_bound_holds(std::int64_t edges, std::int64_t shadow, int n);

}  // namespace shadowlab
