#include "polyvortex/roots.hpp"

#include <algorithm>
#include <cmath>

namespace polyvortex {

double refine_root(const std::function<double(double)>& f, double a, double b,
                   const std::function<double(double)>& df) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  // bisection to 1e-13 relative width
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (b - a <= 1e-13 * std::max(1.0, std::abs(m))) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  double x = 0.5 * (a + b);
  if (df) {
    for (int it = 0; it < 4; ++it) {
      const double d = df(x);
      if (d == 0.0) break;
      const double step = f(x) / d;
      const double next = x - step;
      if (!(next > a && next < b)) break;  // keep the bracket
      x = next;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
  }
  return x;
}

namespace {

// Panel scan; panels whose interior dips toward zero without a sign change
// are re-scanned at finer resolution (near-tangent root pairs).
void scan(const std::function<double(double)>& f, double a, double fa, double b,
          double fb, int panels, int depth, const std::function<double(double)>& df,
          double tangent_tol, std::vector<double>& roots) {
  const double h = (b - a) / panels;
  double x0 = a;
  double f0 = fa;
  for (int i = 1; i <= panels; ++i) {
    const double x1 = (i == panels) ? b : a + i * h;
    const double f1 = (i == panels) ? fb : f(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if ((f0 < 0.0) != (f1 < 0.0)) {
      roots.push_back(refine_root(f, x0, x1, df));
    } else if (depth > 0) {
      const double fm = f(0.5 * (x0 + x1));
      const bool dip = std::abs(fm) < 0.25 * std::min(std::abs(f0), std::abs(f1)) ||
                       (tangent_tol > 0.0 && std::abs(fm) < tangent_tol);
      if (dip) scan(f, x0, f0, x1, f1, 16, depth - 1, df, tangent_tol, roots);
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0.0) roots.push_back(b);
}

}  // namespace

std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo,
                                  double hi, int subdivisions,
                                  const std::function<double(double)>& df,
                                  double tangent_tol) {
  std::vector<double> roots;
  if (!(hi > lo) || subdivisions < 1) return roots;
  scan(f, lo, f(lo), hi, f(hi), subdivisions, 3, df, tangent_tol, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> dedupe_sorted(std::vector<double> xs, double rel_tol) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (out.empty() || std::abs(x - out.back()) > rel_tol * std::max(1.0, std::abs(x))) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace polyvortex
