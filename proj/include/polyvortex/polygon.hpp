#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "polyvortex/system.hpp"

namespace polyvortex {

/// One regular n-gon of vortices with vertices s * rho^k, rho = exp(i 2 pi / n).
struct PolygonRing {
  int n;                           // vertex count, >= 2
  PlanePoint s;                    // vertex 0; must be nonzero
  std::vector<double> vorticities; // per-vertex, length n
};

VortexSystem ring_to_system(const PolygonRing& r);

/// Angular velocity of a regular-polygon relative equilibrium:
/// (n-1)/(2 n |s|^2) * total vorticity.
double polygon_omega(int n, PlanePoint s, double total_vorticity);

/// Velocity field of a ring of n unit vortices at s*rho^k, scaled by gamma:
/// gamma * i n conj(z)^{n-1} / (conj(z)^n - conj(s)^n). Defined at z = 0
/// (value 0); throws SingularFieldError when z^n is too close to s^n.
PlanePoint polygon_field(int n, PlanePoint s, double gamma, PlanePoint z);

enum class CirculantKind { C, C0 };

const char* to_string(CirculantKind k);

/// Spectrum of the circulant matrices behind the polygon rigidity argument.
/// eigenvalues holds the closed form (n-1)/2 - k (with the last entry 0 for
/// kind C); max_residual is the worst defect of the numerically built matrix
/// applied to each Fourier eigenvector against that closed form.
struct CirculantSpectrum {
  int n;
  CirculantKind kind;
  std::vector<double> eigenvalues;
  std::vector<std::vector<PlanePoint>> eigenvectors;  // v_k = (1, rho^k, ..., rho^{(n-1)k})
  double max_residual;
};

CirculantSpectrum circulant_spectrum(int n, CirculantKind kind);

std::string spectrum_to_json(const CirculantSpectrum& sp);

enum class RingCase { Rotating, Translating };

/// Real vorticity vectors admitting a rigid motion of one regular n-gon.
/// Rotating: span{(1,...,1)} plus real vectors in the kernel of C.
/// Translating: real vectors compatible with the translating structure
/// (kernel of C0 plus the Fourier mode coupled to the translation velocity).
struct VorticitySolutionSpace {
  int n;
  RingCase ring_case;
  int dimension;
  Eigen::MatrixXd basis;  // orthonormal columns, n x dimension
};

VorticitySolutionSpace vorticity_solution_space(int n, RingCase ring_case);

}  // namespace polyvortex
