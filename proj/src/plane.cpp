#include "polyvortex/plane.hpp"

#include <cmath>
#include <numbers>

namespace polyvortex {

double normalize_angle(double a) {
  constexpr double pi = std::numbers::pi;
  a = std::remainder(a, 2.0 * pi);  // lands in [-pi, pi]
  if (a <= -pi) a += 2.0 * pi;
  return a;
}

double argument(PlanePoint p) { return normalize_angle(std::arg(p)); }

PlanePoint ipow(PlanePoint p, int k) {
  if (k < 0) return 1.0 / ipow(p, -k);
  PlanePoint acc(1.0, 0.0);
  PlanePoint base = p;
  unsigned e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

PlanePoint root_of_unity(int n, int k) {
  constexpr double pi = std::numbers::pi;
  int m = k % n;
  if (m < 0) m += n;
  return std::polar(1.0, 2.0 * pi * static_cast<double>(m) / static_cast<double>(n));
}

}  // namespace polyvortex
