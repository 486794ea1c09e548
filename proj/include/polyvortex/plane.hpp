#pragma once

#include <complex>

namespace polyvortex {

/// A point of the plane with full complex arithmetic semantics.
using PlanePoint = std::complex<double>;

constexpr double kZeroVorticityTol = 1e-12;  // |sum of vorticities| below this counts as zero
constexpr double kMinMutualDistance = 1e-9;  // closest pair allowed at construction

inline double modulus(PlanePoint p) { return std::abs(p); }

/// Principal angle in (-pi, pi].
double normalize_angle(double a);

/// Argument of p, normalized to (-pi, pi].
double argument(PlanePoint p);

/// p^k for any integer k (binary exponentiation; k < 0 inverts).
PlanePoint ipow(PlanePoint p, int k);

/// Primitive n-th root of unity exp(i 2 pi / n) raised to the k-th power.
PlanePoint root_of_unity(int n, int k);

}  // namespace polyvortex
