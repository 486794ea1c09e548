#include "polyvortex/system.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "polyvortex/errors.hpp"

namespace polyvortex {

VortexSystem::VortexSystem(std::vector<PlanePoint> positions, std::vector<double> vorticities)
    : positions_(std::move(positions)), vorticities_(std::move(vorticities)) {
  if (positions_.size() < 2) {
    throw ValidationError("vortex system needs at least 2 vortices, got " +
                          std::to_string(positions_.size()));
  }
  if (positions_.size() != vorticities_.size()) {
    throw ValidationError("positions/vorticities length mismatch: " +
                          std::to_string(positions_.size()) + " vs " +
                          std::to_string(vorticities_.size()));
  }
  min_distance_ = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < positions_.size(); ++k) {
    for (std::size_t l = k + 1; l < positions_.size(); ++l) {
      min_distance_ = std::min(min_distance_, std::abs(positions_[k] - positions_[l]));
    }
  }
  if (!(min_distance_ >= kMinMutualDistance)) {
    throw ValidationError("vortex positions too close: min mutual distance " +
                          std::to_string(min_distance_));
  }
}

Eigen::MatrixXd mutual_distances(const VortexSystem& s) {
  const auto& z = s.positions();
  const Eigen::Index n = static_cast<Eigen::Index>(z.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = k + 1; l < n; ++l) {
      const double r = std::abs(z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(l)]);
      d(k, l) = r;
      d(l, k) = r;
    }
  }
  return d;
}

ConservedQuantities conserved(const VortexSystem& s) {
  const auto& z = s.positions();
  const auto& g = s.vorticities();
  const std::size_t n = z.size();

  ConservedQuantities q{};
  double total = 0.0;
  PlanePoint weighted(0.0, 0.0);
  double impulse = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    total += g[k];
    weighted += g[k] * z[k];
    impulse += g[k] * std::norm(z[k]);
  }
  q.total_vorticity = total;
  q.angular_impulse = impulse;
  if (std::abs(total) >= kZeroVorticityTol) {
    q.center_of_vorticity = weighted / total;
  }

  double h = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      h += g[k] * g[l] * std::log(std::abs(z[k] - z[l]));
    }
  }
  q.hamiltonian = -h / (4.0 * std::numbers::pi);
  return q;
}

}  // namespace polyvortex
