#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "polyvortex/dynamics.hpp"
#include "polyvortex/system.hpp"

namespace polyvortex {

/// Two concentric regular n-gons with per-ring vorticities.
struct NestedPolygonConfig {
  int n;
  PlanePoint s1;
  PlanePoint s2;
  double gamma1;
  double gamma2;
};

/// Second ring on vertex rays of the first (argument 2K pi/n) or on
/// midpoint rays (argument 2(K+1/2) pi/n).
enum class Alignment { Aligned, Staggered };

const char* to_string(Alignment a);

/// Coefficients of the radius equation (x^2 - alpha)(x^n - beta) = gamma.
struct PolynomialInstance {
  double alpha;
  double beta;
  double gamma;
  int n;
};

/// Threshold ratio n/(n-1) + sqrt((n/(n-1))^2 - 1) separating the
/// opposite-sign count regimes.
double mu(int n);

/// 2n/(n-1); equals mu(n) + 1/mu(n).
double lambda_n(int n);

/// Radius-equation coefficients for ratio r = gamma2/gamma1 and alignment.
PolynomialInstance equation_coefficients(int n, double gamma_ratio, Alignment alignment);

/// (x^2 - alpha)(x^n - beta) - gamma, for x > 0.
double g_eval(const PolynomialInstance& p, double x);

/// Derivative in t = x^2 of the same expression:
/// (n/2 + 1) t^{n/2} - alpha (n/2) t^{n/2-1} - beta, for t > 0.
double f_eval(const PolynomialInstance& p, double t);

/// All roots x > 0, each refined to 1e-12 relative, deduplicated at 1e-9
/// relative. Found by monotone-interval subdivision at the critical points
/// of the t-substituted form, then bisection and Newton polish.
std::vector<double> positive_roots(const PolynomialInstance& p);

/// Root count from the sign case analysis alone. lo == hi when a case gives
/// an exact count; boundary is set when a case-deciding quantity sits within
/// 1e-10 of zero (callers may perturb and retry).
struct AnalyticCount {
  int lo;
  int hi;
  bool boundary;
  bool exact() const { return lo == hi; }
};

AnalyticCount count_roots_analytic(const PolynomialInstance& p);

struct CountRange {
  int lo;
  int hi;
  bool exact() const { return lo == hi; }
  bool contains(int c) const { return lo <= c && c <= hi; }
};

/// Predicted numbers of aligned and staggered nested equilibria for a
/// vorticity ratio, straight from the counting theorem.
struct RegimeClassification {
  int n;
  double gamma_ratio;
  CountRange aligned;
  CountRange staggered;
  double mu_n;
  double lambda_n;
  std::string regime;
};

RegimeClassification classify_regime(int n, double gamma_ratio);

struct NestedSolution {
  Alignment alignment;
  double x;  // |s2/s1|
  VortexSystem system;
  EquilibriumReport report;
  bool boundary_warning;  // analytic counter sat on a case boundary
};

/// All nested relative equilibria for the given rings: solves both radius
/// equations, drops the aligned root x = 1 when gamma1 + gamma2 = 0, and
/// verifies every configuration dynamically.
std::vector<NestedSolution> solve_nested(int n, double gamma1, double gamma2,
                                         PlanePoint s1, double tol = 1e-9);

struct AbsoluteEquilibriumResult {
  double gamma2;
  PlanePoint s2_over_s1;
  VortexSystem system;
};

/// The staggered two-ring configuration with all velocities zero:
/// gamma2/gamma1 = -mu(n), |s2/s1| = mu(n)^{2/n}, argument pi/n.
AbsoluteEquilibriumResult absolute_equilibrium(int n, double gamma1,
                                               PlanePoint s1 = PlanePoint(1.0, 0.0));

struct RegimeScanRow {
  RegimeClassification prediction;
  int aligned_numeric;
  int staggered_numeric;
  bool consistent;
};

/// Analytic prediction and numeric root count per grid ratio. Grid points
/// are processed independently (possibly concurrently) and merged by index.
std::vector<RegimeScanRow> scan_regimes(int n, const std::vector<double>& ratios);

/// CSV columns: n, gamma_ratio, regime_label, aligned_predicted,
/// aligned_numeric, staggered_predicted, staggered_numeric, mu_n.
void write_scan_csv(const std::vector<RegimeScanRow>& rows, std::ostream& out);

}  // namespace polyvortex
