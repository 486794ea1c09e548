#include "polyvortex/corotating.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"
#include "polyvortex/errors.hpp"
#include "polyvortex/json_io.hpp"
#include "polyvortex/polygon.hpp"
#include "polyvortex/roots.hpp"

namespace polyvortex {

const char* to_string(RayKind k) {
  switch (k) {
    case RayKind::Origin: return "ORIGIN";
    case RayKind::VertexRay: return "VERTEX_RAY";
    case RayKind::MidpointRay: return "MIDPOINT_RAY";
  }
  return "ORIGIN";
}

namespace {

constexpr PlanePoint kImagUnit(0.0, 1.0);
constexpr double kPointResidualTol = 1e-10;

double ray_equation(int n, double sign, double t) {
  // (n-1) t^n - 2n t^{n-2} -+ (n-1); sign = -1 on the vertex ray, +1 on the
  // midpoint ray
  return (n - 1.0) * std::pow(t, n) - 2.0 * n * std::pow(t, n - 2) + sign * (n - 1.0);
}

double ray_equation_derivative(int n, double t) {
  return n * (n - 1.0) * std::pow(t, n - 1) - 2.0 * n * (n - 2.0) * std::pow(t, n - 3);
}

}  // namespace

std::vector<CorotatingPoint> corotating_single(int n, PlanePoint s, double gamma) {
  if (n < 2) throw ValidationError("corotating_single needs n >= 2");
  if (gamma == 0.0) throw ValidationError("polygon vorticity must be nonzero");
  if (!(std::abs(s) > 0.0)) throw ValidationError("polygon vertex s must be nonzero");

  const double omega = polygon_omega(n, s, n * gamma);
  std::vector<CorotatingPoint> points;
  points.push_back(CorotatingPoint{RayKind::Origin, 0, 0.0, PlanePoint(0.0, 0.0), 0.0});

  const double t_max = 1.0 + 2.0 * n / (n - 1.0);  // coefficient bound
  for (RayKind ray : {RayKind::VertexRay, RayKind::MidpointRay}) {
    const double sign = (ray == RayKind::VertexRay) ? -1.0 : 1.0;
    auto f = [&](double t) { return ray_equation(n, sign, t); };
    auto df = [&](double t) { return ray_equation_derivative(n, t); };
    const double phase = (ray == RayKind::VertexRay) ? 0.0 : std::numbers::pi / n;
    for (double t : bracket_roots(f, 1e-12, t_max, 64, df)) {
      const PlanePoint z = s * std::polar(t, phase);
      const double residual = std::abs(polygon_field(n, s, gamma, z) - kImagUnit * omega * z);
      if (residual >= kPointResidualTol) {
        throw Error("co-rotating point failed verification: residual " +
                    format_double(residual));
      }
      points.push_back(CorotatingPoint{ray, 0, t, z, residual});
    }
  }
  return points;
}

namespace {

Alignment alignment_of_ratio(int n, PlanePoint ratio) {
  const double step = std::numbers::pi / n;
  const double a = argument(ratio);
  const double frac = a / step - std::round(a / step);
  if (std::abs(frac) * step > 1e-9) {
    throw ValidationError("ring ratio argument is not a multiple of pi/n");
  }
  const long idx = std::lround(a / step);
  return (idx % 2 == 0) ? Alignment::Aligned : Alignment::Staggered;
}

}  // namespace

std::vector<CorotatingPoint> corotating_nested(const NestedPolygonConfig& config,
                                               Alignment alignment, double x) {
  const int n = config.n;
  if (n < 2) throw ValidationError("corotating_nested needs n >= 2");
  if (config.gamma1 == 0.0 || config.gamma2 == 0.0) {
    throw ValidationError("ring vorticities must be nonzero");
  }
  if (!(std::abs(config.s1) > 0.0) || !(std::abs(config.s2) > 0.0)) {
    throw ValidationError("ring positions must be nonzero");
  }
  const PlanePoint ratio = config.s2 / config.s1;
  if (std::abs(std::abs(ratio) - x) > 1e-9 * std::max(1.0, x)) {
    throw ValidationError("configured ring ratio does not match the solution radius");
  }
  if (alignment_of_ratio(n, ratio) != alignment) {
    throw ValidationError("configured ring ratio does not match the solution alignment");
  }

  const bool same_sign = (config.gamma1 > 0.0) == (config.gamma2 > 0.0);
  const bool admissible = (same_sign && alignment == Alignment::Aligned) ||
                          (!same_sign && alignment == Alignment::Staggered);
  if (!admissible) {
    throw HypothesisUnmetError(
        "co-rotating ray analysis requires same-sign vorticities on vertex rays or "
        "opposite-sign vorticities on midpoint rays");
  }

  std::vector<PlanePoint> positions;
  std::vector<double> vorticities;
  for (int k = 0; k < n; ++k) {
    positions.push_back(config.s1 * root_of_unity(n, k));
    vorticities.push_back(config.gamma1);
  }
  for (int k = 0; k < n; ++k) {
    positions.push_back(config.s2 * root_of_unity(n, k));
    vorticities.push_back(config.gamma2);
  }
  const VortexSystem system(positions, vorticities);
  const EquilibriumReport rep = classify(system);
  if (rep.kind != EquilibriumKind::Rotation && rep.kind != EquilibriumKind::Absolute) {
    throw ValidationError("configuration is not a nested relative equilibrium (residual " +
                          format_double(rep.residual) + ")");
  }
  const double omega = rep.omega;
  const double s1_sq = std::norm(config.s1);
  const double g1 = config.gamma1;
  const double g2 = config.gamma2;
  const double xn = std::pow(x, n);
  const double sign2 = (alignment == Alignment::Aligned) ? 1.0 : -1.0;  // (s2/s1)^n / x^n

  std::vector<CorotatingPoint> points;
  points.push_back(CorotatingPoint{RayKind::Origin, 0, 0.0, PlanePoint(0.0, 0.0),
                                   std::abs(polygon_field(n, config.s1, g1, {0.0, 0.0}) +
                                            polygon_field(n, config.s2, g2, {0.0, 0.0}))});

  // root scale when the configuration rotates; fixed-point scale otherwise
  double far = 2.0 * std::max(1.0, x);
  if (std::abs(omega) * s1_sq > 1e-14) {
    far = std::max(far, 2.0 * std::sqrt(n * (std::abs(g1) + std::abs(g2)) /
                                        (std::abs(omega) * s1_sq)));
  } else if (std::abs(g1 + g2) > 1e-14) {
    far = std::max(far, 2.0 * std::pow((std::abs(g1) * xn + std::abs(g2)) / std::abs(g1 + g2),
                                       1.0 / n));
  }
  const double t_max = far + 1.0;

  for (int kprime = 0; kprime < 2 * n; ++kprime) {
    const double eps_z = (kprime % 2 == 0) ? 1.0 : -1.0;  // (z/s1)^n / t^n on this ray
    auto g = [&](double t) {
      const double tn = std::pow(t, n);
      const double tn1 = std::pow(t, n - 1);
      return n * tn1 * eps_z *
                 (g1 / (eps_z * tn - 1.0) + g2 / (eps_z * tn - sign2 * xn)) -
             omega * s1_sq * t;
    };

    // ring radii cut the ray into segments ending at the field singularities
    std::vector<double> cuts;
    if (eps_z > 0.0) cuts.push_back(1.0);
    if (eps_z == sign2) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<std::pair<double, double>> segments;
    double lo = 0.0;
    for (double c : cuts) {
      if (c < t_max) segments.emplace_back(lo, c);
      lo = c;
    }
    segments.emplace_back(lo, t_max);

    const double phase = kprime * std::numbers::pi / n;
    for (const auto& [a, b] : segments) {
      const double pad = 1e-9 * std::max(1.0, b - a);
      for (double t : bracket_roots(g, a + pad, b - pad, 64)) {
        const PlanePoint z = config.s1 * std::polar(t, phase);
        const double residual =
            std::abs(polygon_field(n, config.s1, g1, z) + polygon_field(n, config.s2, g2, z) -
                     kImagUnit * omega * z);
        if (residual < kPointResidualTol) {
          const RayKind ray = (kprime % 2 == 0) ? RayKind::VertexRay : RayKind::MidpointRay;
          points.push_back(CorotatingPoint{ray, kprime, t, z, residual});
        }
      }
    }
  }
  return points;
}

CorotatingPoint corotating_absolute(int n, double gamma1) {
  const AbsoluteEquilibriumResult abs_eq = absolute_equilibrium(n, gamma1);
  const double r = abs_eq.gamma2 / gamma1;  // equals -mu(n)
  const double ratio_pow = r * (1.0 - r) / (1.0 + r);  // (z/s1)^n, positive real
  if (!(ratio_pow > 0.0)) {
    throw Error("fixed-point radius power came out non-positive: " + format_double(ratio_pow));
  }
  const double t = std::pow(ratio_pow, 1.0 / n);
  const PlanePoint s1(1.0, 0.0);
  const PlanePoint z = t * s1;
  const PlanePoint s2 = s1 * abs_eq.s2_over_s1;
  const double residual = std::abs(polygon_field(n, s1, gamma1, z) +
                                   polygon_field(n, s2, abs_eq.gamma2, z));
  if (residual >= kPointResidualTol) {
    throw Error("absolute-equilibrium fixed point failed verification: residual " +
                format_double(residual));
  }
  return CorotatingPoint{RayKind::VertexRay, 0, t, z, residual};
}

std::string corotating_to_json(const VortexSystem& generator,
                               const std::vector<CorotatingPoint>& points) {
  nlohmann::ordered_json j;
  j["generator"] = system_to_json(generator);
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    nlohmann::ordered_json pj;
    pj["ray"] = to_string(p.ray);
    pj["K"] = p.k;
    pj["radius"] = p.radius;
    pj["position"] = nlohmann::ordered_json::array({std::real(p.position), std::imag(p.position)});
    pj["residual"] = p.residual;
    j["points"].push_back(pj);
  }
  return j.dump();
}

}  // namespace polyvortex
