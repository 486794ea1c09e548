#pragma once

#include <string>
#include <vector>

#include "polyvortex/nested.hpp"

namespace polyvortex {

enum class RayKind { Origin, VertexRay, MidpointRay };

const char* to_string(RayKind k);

/// A zero-vorticity point that rotates rigidly with its generating
/// configuration. radius is |z/s1| (0 for the origin); residual is the
/// defect of the co-rotation condition at the point.
struct CorotatingPoint {
  RayKind ray;
  int k;  // ray index K'
  double radius;
  PlanePoint position;
  double residual;
};

/// Co-rotating points of one regular n-gon with equal vorticities gamma:
/// the origin, one point on the vertex ray, and two points (one for n = 2)
/// on the midpoint ray. Canonical K' = 0 representatives; the remaining
/// rays are rho-rotations of these.
std::vector<CorotatingPoint> corotating_single(int n, PlanePoint s, double gamma);

/// Co-rotating points of a nested relative equilibrium, one scalar equation
/// per ray K' pi/n for K' in [0, 2n). Requires the sign/alignment hypotheses
/// (same-sign vorticities with Aligned, opposite-sign with Staggered);
/// throws HypothesisUnmetError otherwise.
std::vector<CorotatingPoint> corotating_nested(const NestedPolygonConfig& config,
                                               Alignment alignment, double x);

/// The unique nonzero fixed point of the two-ring absolute equilibrium;
/// lies on a vertex ray of the internal polygon.
CorotatingPoint corotating_absolute(int n, double gamma1);

std::string corotating_to_json(const VortexSystem& generator,
                               const std::vector<CorotatingPoint>& points);

}  // namespace polyvortex
