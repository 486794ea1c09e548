#pragma once

#include <functional>
#include <vector>

namespace polyvortex {

/// Scalar root bracketing and refinement shared by the radius equations and
/// the co-rotating ray equations.

/// Bisect f on [a, b] with f(a) f(b) < 0 down to 1e-12 relative width,
/// then polish with a few guarded Newton steps when df is supplied.
double refine_root(const std::function<double(double)>& f, double a, double b,
                   const std::function<double(double)>& df = nullptr);

/// All sign-change roots of f on (lo, hi), scanned over `subdivisions`
/// initial panels with adaptive refinement near unresolved sign structure.
/// Tangent roots (|f| below tangent_tol at a panel edge) are kept once.
std::vector<double> bracket_roots(const std::function<double(double)>& f,
                                  double lo, double hi, int subdivisions,
                                  const std::function<double(double)>& df = nullptr,
                                  double tangent_tol = 0.0);

/// Merge values closer than rel_tol relative to their magnitude.
std::vector<double> dedupe_sorted(std::vector<double> xs, double rel_tol);

}  // namespace polyvortex
