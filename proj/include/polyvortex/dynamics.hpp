#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "polyvortex/system.hpp"

namespace polyvortex {

enum class EquilibriumKind { Absolute, RigidTranslation, Rotation, None };

const char* to_string(EquilibriumKind k);

/// Outcome of testing a configuration for rigid motion: for a relative
/// equilibrium there is a real omega with v_l - v_k = i omega (z_l - z_k)
/// for every pair, and the residual is the worst pair defect under the
/// best-fit omega.
struct EquilibriumReport {
  EquilibriumKind kind = EquilibriumKind::None;
  double omega = 0.0;  // rad per unit time; 0 for Absolute / RigidTranslation
  std::optional<PlanePoint> translation_velocity;
  std::optional<PlanePoint> center;  // center of rotation
  double residual = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<VortexSystem> states;
  double max_hamiltonian_drift = 0.0;
  double max_distance_drift = 0.0;  // relative, against the initial state
};

/// Velocities v_k = i sum_{l != k} Gamma_l (z_k - z_l)/|z_k - z_l|^2.
std::vector<PlanePoint> velocities(const VortexSystem& s);

/// Classify a configuration as absolute equilibrium, rigid translation,
/// rotation or none, fitting omega by least squares over all pairs.
EquilibriumReport classify(const VortexSystem& s, double tol = 1e-9);

/// Adaptive Dormand-Prince 5(4) integration of the point-vortex equations.
/// Throws CloseApproachError if a pair falls below the minimum distance.
Trajectory integrate(const VortexSystem& s, double t_end, double rel_tol);

/// Sum over pairs of vorticity products; vanishes for any absolute equilibrium.
double oneil_sum(const VortexSystem& s);

/// CSV with mandatory header t,x_0,y_0,...,x_{N-1},y_{N-1}, one state per line.
void write_trajectory_csv(const Trajectory& tr, std::ostream& out);

}  // namespace polyvortex
