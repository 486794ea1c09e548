#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "polyvortex/plane.hpp"

namespace polyvortex {

/// Positions and vorticities of N >= 2 point vortices. Immutable after
/// construction; construction enforces pairwise-distinct positions
/// (minimum mutual distance kMinMutualDistance) and matching lengths.
class VortexSystem {
 public:
  VortexSystem(std::vector<PlanePoint> positions, std::vector<double> vorticities);

  const std::vector<PlanePoint>& positions() const { return positions_; }
  const std::vector<double>& vorticities() const { return vorticities_; }
  std::size_t size() const { return positions_.size(); }

  double min_mutual_distance() const { return min_distance_; }

 private:
  std::vector<PlanePoint> positions_;
  std::vector<double> vorticities_;
  double min_distance_;
};

struct ConservedQuantities {
  double total_vorticity;
  std::optional<PlanePoint> center_of_vorticity;  // absent when total vorticity vanishes
  double hamiltonian;
  double angular_impulse;
};

/// Symmetric matrix of pairwise distances |z_k - z_l|, zero diagonal.
Eigen::MatrixXd mutual_distances(const VortexSystem& s);

ConservedQuantities conserved(const VortexSystem& s);

}  // namespace polyvortex
