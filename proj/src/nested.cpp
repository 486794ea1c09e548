#include "polyvortex/nested.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polyvortex/errors.hpp"
#include "polyvortex/json_io.hpp"
#include "polyvortex/polygon.hpp"
#include "polyvortex/roots.hpp"

namespace polyvortex {

const char* to_string(Alignment a) { return a == Alignment::Aligned ? "ALIGNED" : "STAGGERED"; }

double mu(int n) {
  if (n < 2) throw ValidationError("mu needs n >= 2");
  const double q = static_cast<double>(n) / (n - 1);
  return q + std::sqrt(q * q - 1.0);
}

double lambda_n(int n) {
  if (n < 2) throw ValidationError("lambda needs n >= 2");
  return 2.0 * n / (n - 1.0);
}

PolynomialInstance equation_coefficients(int n, double gamma_ratio, Alignment alignment) {
  if (n < 2) throw ValidationError("equation_coefficients needs n >= 2");
  if (gamma_ratio == 0.0) throw ValidationError("vorticity ratio must be nonzero");
  const double lam = lambda_n(n);
  const double r = gamma_ratio;
  PolynomialInstance p;
  p.n = n;
  p.alpha = r + lam;
  const double rhs = lam * (r * r + lam * r + 1.0);
  if (alignment == Alignment::Aligned) {
    p.beta = lam * r + 1.0;
    p.gamma = rhs;
  } else {
    p.beta = -(lam * r + 1.0);
    p.gamma = -rhs;
  }
  return p;
}

double g_eval(const PolynomialInstance& p, double x) {
  if (!(x > 0.0)) throw ValidationError("g_eval needs x > 0");
  return (x * x - p.alpha) * (std::pow(x, p.n) - p.beta) - p.gamma;
}

double f_eval(const PolynomialInstance& p, double t) {
  if (!(t > 0.0)) throw ValidationError("f_eval needs t > 0");
  const double half_n = p.n / 2.0;
  return (half_n + 1.0) * std::pow(t, half_n) - p.alpha * half_n * std::pow(t, half_n - 1.0) -
         p.beta;
}

namespace {

double coefficient_scale(const PolynomialInstance& p) {
  return std::max({1.0, std::abs(p.alpha), std::abs(p.beta), std::abs(p.gamma)});
}

// Upper bound for roots of the radius equation (coefficient bound on
// x^{n+2} - alpha x^n - beta x^2 + alpha beta - gamma).
double x_upper_bound(const PolynomialInstance& p) {
  return 1.0 + std::max({std::abs(p.alpha), std::abs(p.beta), std::abs(p.gamma),
                         std::abs(p.alpha * p.beta - p.gamma)});
}

// Strictly positive zeros of the t-derivative: at most two, isolated by its
// single interior extremum t* = alpha (n-2)/(n+2).
std::vector<double> derivative_zeros(const PolynomialInstance& p) {
  std::vector<double> zeros;
  if (p.n == 2) {
    const double t0 = (p.alpha + p.beta) / 2.0;
    if (t0 > 0.0) zeros.push_back(t0);
    return zeros;
  }
  const double t_max = 1.0 + std::abs(p.alpha) + std::abs(p.beta);
  const double t_lo = 1e-300;
  auto f = [&](double t) { return f_eval(p, t); };
  const double f0 = -p.beta;  // limit at t -> 0+ for n >= 3

  const double t_star = p.alpha * (p.n - 2.0) / (p.n + 2.0);
  if (!(t_star > 0.0)) {
    // derivative is strictly increasing: at most one zero
    if (f0 < 0.0 && f(t_max) > 0.0) zeros.push_back(refine_root(f, t_lo, t_max));
    return zeros;
  }
  const double f_star = f(t_star);
  const double f_scale = std::max({1.0, std::abs(p.alpha), std::abs(p.beta)});
  if (std::abs(f_star) <= 1e-12 * f_scale) {
    zeros.push_back(t_star);  // tangent zero
    return zeros;
  }
  // decreasing on (0, t*), increasing on (t*, inf)
  if (f0 > 0.0 && f_star < 0.0) zeros.push_back(refine_root(f, t_lo, t_star));
  if (f_star < 0.0 && f(t_max) > 0.0) zeros.push_back(refine_root(f, t_star, t_max));
  return zeros;
}

// Monotone breakpoints of the radius equation in x.
std::vector<double> monotone_breakpoints(const PolynomialInstance& p) {
  std::vector<double> xs;
  for (double t : derivative_zeros(p)) xs.push_back(std::sqrt(t));
  std::sort(xs.begin(), xs.end());
  return xs;
}

double g_derivative(const PolynomialInstance& p, double x) {
  return 2.0 * x * (std::pow(x, p.n) - p.beta) +
         p.n * std::pow(x, p.n - 1) * (x * x - p.alpha);
}

}  // namespace

std::vector<double> positive_roots(const PolynomialInstance& p) {
  if (p.n < 2) throw ValidationError("positive_roots needs n >= 2");
  const double x_max = x_upper_bound(p);
  const double g0 = p.alpha * p.beta - p.gamma;  // limit of the equation at x -> 0+
  const double scale = coefficient_scale(p);

  std::vector<double> breaks = monotone_breakpoints(p);
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                              [&](double x) { return !(x > 0.0) || x >= x_max; }),
               breaks.end());

  auto g = [&](double x) { return g_eval(p, x); };
  auto dg = [&](double x) { return g_derivative(p, x); };

  std::vector<double> roots;
  // walk the monotone pieces; the equation is strictly monotone between
  // consecutive breakpoints, so each piece holds at most one root
  double left = 0.0;
  double g_left = g0;
  std::vector<double> edges = breaks;
  edges.push_back(x_max);
  for (double right : edges) {
    if (!(right > left)) continue;
    if (g_left == 0.0) {
      // exact zero on a piece edge: record it (excluding the x -> 0 limit)
      // and take the sign just inside the piece
      if (left > 0.0) roots.push_back(left);
      g_left = g(left + 1e-9 * (right - left));
    }
    const double g_right = g(right);
    if ((g_left < 0.0) != (g_right < 0.0)) {
      const double a = (left > 0.0) ? left : std::min(1e-300, right / 2.0);
      roots.push_back(refine_root(g, a, right, dg));
    } else if (std::abs(g_right) <= 1e-12 * scale && right < x_max) {
      roots.push_back(right);  // tangency at a breakpoint
    }
    left = right;
    g_left = g_right;
  }
  if (g_left == 0.0) roots.push_back(x_max);

  return dedupe_sorted(std::move(roots), 1e-9);
}

namespace {

constexpr double kBoundaryTol = 1e-10;

enum class FRegion { Axis_NegAlpha, Tangent, Axis_PosAlpha, NoZeros, TwoZeros, OneZero };
// Regions of the (alpha, beta) plane by the number of positive zeros of the
// t-derivative: beta > 0 -> one zero; beta = 0 with alpha > 0 -> one (axis);
// beta = 0 with alpha < 0 -> none; beta < 0 -> none, two, or one tangent
// zero depending on beta^2 against alpha^n (n-2)^{n-2}/(n+2)^{n-2}.
struct RegionResult {
  FRegion region;
  bool boundary;
};

RegionResult classify_region(const PolynomialInstance& p) {
  const double scale = std::max({1.0, std::abs(p.alpha), std::abs(p.beta)});
  if (std::abs(p.beta) < kBoundaryTol * scale) {
    return {p.alpha > 0.0 ? FRegion::Axis_PosAlpha : FRegion::Axis_NegAlpha, true};
  }
  if (p.beta > 0.0) return {FRegion::OneZero, false};
  if (p.alpha <= 0.0) return {FRegion::NoZeros, false};
  const double crit = std::pow(p.alpha, p.n) * std::pow(p.n - 2.0, p.n - 2) /
                      std::pow(p.n + 2.0, p.n - 2);
  const double q = p.beta * p.beta - crit;
  const double qscale = std::max({1.0, p.beta * p.beta, crit});
  if (std::abs(q) < kBoundaryTol * qscale) return {FRegion::Tangent, true};
  return {q > 0.0 ? FRegion::NoZeros : FRegion::TwoZeros, false};
}

// Sign-change count across the monotone skeleton (limit value at 0, values
// at the critical points, +infinity); tangent critical values widen the
// count to a range.
AnalyticCount skeleton_count(const PolynomialInstance& p) {
  const double scale = coefficient_scale(p);
  const double vtol = kBoundaryTol * scale;

  std::vector<double> vals;
  vals.push_back(p.alpha * p.beta - p.gamma);
  for (double x : monotone_breakpoints(p)) vals.push_back(g_eval(p, x));
  vals.push_back(std::max(1.0, scale));  // stands for the +infinity limit

  AnalyticCount out{0, 0, false};
  int tangents = 0;
  if (std::abs(vals.front()) < vtol) out.boundary = true;  // root at the x -> 0 edge
  double prev = vals.front();
  for (std::size_t i = 1; i < vals.size(); ++i) {
    const double cur = vals[i];
    if (i + 1 < vals.size() && std::abs(cur) < vtol) {
      ++tangents;
      out.boundary = true;
    } else if ((prev < 0.0) != (cur < 0.0)) {
      ++out.lo;
    }
    if (std::abs(cur) >= vtol || i + 1 == vals.size()) prev = cur;
  }
  out.hi = std::min(out.lo + 2 * tangents, 3);
  return out;
}

AnalyticCount exact(int c, bool boundary = false) { return {c, c, boundary}; }

AnalyticCount count_biquadratic(const PolynomialInstance& p) {
  const double scale = coefficient_scale(p);
  const double disc = (p.beta - p.alpha) * (p.beta - p.alpha) + 4.0 * p.gamma;
  const double sum = p.alpha + p.beta;
  if (std::abs(disc) < kBoundaryTol * std::max(1.0, scale * scale)) {
    // double root in t at sum/2
    return exact(sum > 0.0 ? 1 : 0, true);
  }
  if (disc < 0.0) return exact(0);
  const double sq = std::sqrt(disc);
  const double t_hi = (sum + sq) / 2.0;
  const double t_lo = (sum - sq) / 2.0;
  const bool boundary = std::abs(t_hi) < kBoundaryTol * std::max(1.0, scale) ||
                        std::abs(t_lo) < kBoundaryTol * std::max(1.0, scale);
  return exact((t_hi > 0.0 ? 1 : 0) + (t_lo > 0.0 ? 1 : 0), boundary);
}

}  // namespace

AnalyticCount count_roots_analytic(const PolynomialInstance& p) {
  if (p.n < 2) throw ValidationError("count_roots_analytic needs n >= 2");
  if (p.n == 2) return count_biquadratic(p);

  const double scale = coefficient_scale(p);
  const double ab = p.alpha * p.beta;
  const double ab_minus_g = ab - p.gamma;
  const bool near_ab = std::abs(ab_minus_g) < kBoundaryTol * scale;

  if (std::abs(p.gamma) < kBoundaryTol * scale) {
    // product form: one root per positive factor zero
    const double stol = kBoundaryTol * std::max(1.0, std::max(std::abs(p.alpha), std::abs(p.beta)));
    int c = (p.alpha > stol ? 1 : 0) + (p.beta > stol ? 1 : 0);
    return exact(c, true);
  }

  if (p.gamma > 0.0) {
    if (near_ab) return exact((p.alpha > 0.0 && p.beta > 0.0) ? 1 : 0, true);
    if (ab_minus_g < 0.0) return exact(1);  // gamma > alpha beta
    // alpha beta > gamma > 0: signs of alpha, beta decide
    const bool tiny_sign = std::min(std::abs(p.alpha), std::abs(p.beta)) <
                           kBoundaryTol * std::max(1.0, scale);
    if (p.alpha > 0.0 && p.beta > 0.0) return exact(2, tiny_sign);
    return exact(0, tiny_sign);
  }

  // gamma < 0
  const RegionResult reg = classify_region(p);
  const bool in_no_zero_side = reg.region == FRegion::NoZeros ||
                               reg.region == FRegion::Tangent ||
                               reg.region == FRegion::Axis_NegAlpha;
  if (ab_minus_g > 0.0 && !near_ab) {
    if (in_no_zero_side) return exact(0, reg.boundary);
  } else if (!near_ab) {  // alpha beta < gamma < 0
    if (reg.region == FRegion::NoZeros || reg.region == FRegion::Tangent ||
        reg.region == FRegion::OneZero) {
      // strictly increasing, or decreasing then increasing, from a negative
      // limit: exactly one crossing
      return exact(1, reg.boundary);
    }
  }

  AnalyticCount sk = skeleton_count(p);
  sk.boundary = sk.boundary || reg.boundary || near_ab;
  return sk;
}

RegimeClassification classify_regime(int n, double gamma_ratio) {
  if (n < 2) throw ValidationError("classify_regime needs n >= 2");
  if (gamma_ratio == 0.0 || !std::isfinite(gamma_ratio)) {
    throw ValidationError("vorticity ratio must be finite and nonzero");
  }
  const double m = mu(n);
  const double r = gamma_ratio;
  auto near = [](double a, double b) { return std::abs(a - b) < kBoundaryTol; };

  RegimeClassification out;
  out.n = n;
  out.gamma_ratio = r;
  out.mu_n = m;
  out.lambda_n = polyvortex::lambda_n(n);

  if (r > 0.0) {
    out.aligned = {2, 2};
    out.staggered = (n == 2) ? CountRange{1, 1} : CountRange{1, 3};
    out.regime = "same_sign";
    return out;
  }
  if (near(r, -1.0)) {
    out.aligned = {0, 0};  // the aligned root x = 1 is not an equilibrium
    out.staggered = {2, 2};
    out.regime = "opposite_equal";
    return out;
  }
  if (n == 2) {
    out.aligned = {1, 1};
    out.staggered = {2, 2};
    out.regime = "opposite_sign";
    return out;
  }
  if (near(r, -m) || near(r, -1.0 / m)) {
    out.aligned = {1, 1};
    out.staggered = {2, 2};
    out.regime = "at_mu_boundary";
    return out;
  }
  if (r > -1.0 / m) {
    out.aligned = {1, 1};
    out.staggered = {0, 2};
    out.regime = "small_negative";
    return out;
  }
  if (r > -m) {
    out.aligned = {1, 3};
    out.staggered = {2, 2};
    out.regime = "middle_negative";
    return out;
  }
  out.aligned = {1, 1};
  out.staggered = {0, 2};
  out.regime = "large_negative";
  return out;
}

namespace {

VortexSystem build_nested_system(int n, double gamma1, double gamma2, PlanePoint s1,
                                 PlanePoint s2) {
  std::vector<PlanePoint> positions;
  std::vector<double> vorticities;
  positions.reserve(static_cast<std::size_t>(2 * n));
  vorticities.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    positions.push_back(s1 * root_of_unity(n, k));
    vorticities.push_back(gamma1);
  }
  for (int k = 0; k < n; ++k) {
    positions.push_back(s2 * root_of_unity(n, k));
    vorticities.push_back(gamma2);
  }
  return VortexSystem(std::move(positions), std::move(vorticities));
}

PlanePoint alignment_phase(int n, Alignment a) {
  return a == Alignment::Aligned
             ? PlanePoint(1.0, 0.0)
             : std::polar(1.0, std::numbers::pi / static_cast<double>(n));
}

std::vector<double> alignment_roots(int n, double gamma1, double gamma2, Alignment a,
                                    bool* boundary) {
  const PolynomialInstance p = equation_coefficients(n, gamma2 / gamma1, a);
  if (boundary != nullptr) *boundary = count_roots_analytic(p).boundary;
  std::vector<double> roots = positive_roots(p);
  if (a == Alignment::Aligned &&
      std::abs(gamma1 + gamma2) < 1e-12 * std::max(std::abs(gamma1), std::abs(gamma2))) {
    // x = 1 solves the equation but both rings coincide: not an equilibrium
    roots.erase(std::remove_if(roots.begin(), roots.end(),
                               [](double x) { return std::abs(x - 1.0) <= 1e-9; }),
                roots.end());
  }
  return roots;
}

}  // namespace

std::vector<NestedSolution> solve_nested(int n, double gamma1, double gamma2, PlanePoint s1,
                                         double tol) {
  if (n < 2) throw ValidationError("solve_nested needs n >= 2");
  if (gamma1 == 0.0 || gamma2 == 0.0) throw ValidationError("ring vorticities must be nonzero");
  if (!(std::abs(s1) > 0.0)) throw ValidationError("s1 must be nonzero");

  std::vector<NestedSolution> out;
  for (Alignment a : {Alignment::Aligned, Alignment::Staggered}) {
    bool boundary = false;
    const std::vector<double> roots = alignment_roots(n, gamma1, gamma2, a, &boundary);
    const PlanePoint phase = alignment_phase(n, a);
    for (double x : roots) {
      const PlanePoint s2 = s1 * (x * phase);
      VortexSystem system = build_nested_system(n, gamma1, gamma2, s1, s2);
      EquilibriumReport report = classify(system, tol);
      if (report.kind != EquilibriumKind::Rotation &&
          report.kind != EquilibriumKind::Absolute) {
        throw Error("nested configuration failed verification: alignment " +
                    std::string(to_string(a)) + ", x = " + format_double(x) +
                    ", residual " + format_double(report.residual));
      }
      out.push_back(NestedSolution{a, x, std::move(system), report, boundary});
    }
  }
  return out;
}

AbsoluteEquilibriumResult absolute_equilibrium(int n, double gamma1, PlanePoint s1) {
  if (n < 2) throw ValidationError("absolute_equilibrium needs n >= 2");
  if (gamma1 == 0.0) throw ValidationError("gamma1 must be nonzero");
  if (!(std::abs(s1) > 0.0)) throw ValidationError("s1 must be nonzero");

  const double m = mu(n);
  const double gamma2 = -m * gamma1;
  // (s2/s1)^n = -(gamma2/gamma1)^2 fixes modulus mu^{2/n} and a staggered argument
  const PlanePoint ratio =
      std::polar(std::pow(m, 2.0 / n), std::numbers::pi / static_cast<double>(n));
  VortexSystem system = build_nested_system(n, gamma1, gamma2, s1, s1 * ratio);

  double max_speed = 0.0;
  for (const auto& v : velocities(system)) max_speed = std::max(max_speed, std::abs(v));
  if (max_speed >= 1e-10) {
    throw Error("absolute equilibrium construction left residual speed " +
                format_double(max_speed));
  }
  return AbsoluteEquilibriumResult{gamma2, ratio, std::move(system)};
}

namespace {

RegimeScanRow scan_one(int n, double r) {
  RegimeScanRow row;
  row.prediction = classify_regime(n, r);
  const double gamma1 = 1.0;
  const double gamma2 = r;
  row.aligned_numeric = static_cast<int>(
      alignment_roots(n, gamma1, gamma2, Alignment::Aligned, nullptr).size());
  row.staggered_numeric = static_cast<int>(
      alignment_roots(n, gamma1, gamma2, Alignment::Staggered, nullptr).size());
  row.consistent = row.prediction.aligned.contains(row.aligned_numeric) &&
                   row.prediction.staggered.contains(row.staggered_numeric);
  return row;
}

}  // namespace

std::vector<RegimeScanRow> scan_regimes(int n, const std::vector<double>& ratios) {
  for (double r : ratios) {
    if (r == 0.0 || !std::isfinite(r)) {
      throw ValidationError("scan ratios must be finite and nonzero");
    }
  }
  std::vector<RegimeScanRow> rows(ratios.size());

  const std::size_t grid = ratios.size();
  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(grid));
  if (grid < 32 || workers < 2) {
    for (std::size_t i = 0; i < grid; ++i) rows[i] = scan_one(n, ratios[i]);
    return rows;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(workers);
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < grid; i += workers) rows[i] = scan_one(n, ratios[i]);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

void write_scan_csv(const std::vector<RegimeScanRow>& rows, std::ostream& out) {
  out << "n,gamma_ratio,regime_label,aligned_predicted,aligned_numeric,"
         "staggered_predicted,staggered_numeric,mu_n\n";
  auto range_text = [](const CountRange& c) {
    return c.exact() ? std::to_string(c.lo) : std::to_string(c.lo) + "-" + std::to_string(c.hi);
  };
  for (const auto& row : rows) {
    const auto& p = row.prediction;
    out << p.n << "," << format_double(p.gamma_ratio) << "," << p.regime << ","
        << range_text(p.aligned) << "," << row.aligned_numeric << ","
        << range_text(p.staggered) << "," << row.staggered_numeric << ","
        << format_double(p.mu_n) << "\n";
  }
}

}  // namespace polyvortex
