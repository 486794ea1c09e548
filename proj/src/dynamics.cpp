#include "polyvortex/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "polyvortex/errors.hpp"
#include "polyvortex/json_io.hpp"

namespace polyvortex {

const char* to_string(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::Absolute: return "ABSOLUTE";
    case EquilibriumKind::RigidTranslation: return "RIGID_TRANSLATION";
    case EquilibriumKind::Rotation: return "ROTATION";
    case EquilibriumKind::None: return "NONE";
  }
  return "NONE";
}

namespace {

constexpr PlanePoint kImagUnit(0.0, 1.0);

std::vector<PlanePoint> velocities_at(const std::vector<PlanePoint>& z,
                                      const std::vector<double>& g) {
  const std::size_t n = z.size();
  std::vector<PlanePoint> v(n, PlanePoint(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    PlanePoint sum(0.0, 0.0);
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      const PlanePoint d = z[k] - z[l];
      const double r2 = std::norm(d);
      if (r2 < kMinMutualDistance * kMinMutualDistance) {
        throw CloseApproachError("mutual distance " + std::to_string(std::sqrt(r2)) +
                                 " below minimum");
      }
      sum += g[l] * d / r2;
    }
    v[k] = kImagUnit * sum;
  }
  return v;
}

}  // namespace

std::vector<PlanePoint> velocities(const VortexSystem& s) {
  return velocities_at(s.positions(), s.vorticities());
}

EquilibriumReport classify(const VortexSystem& s, double tol) {
  if (!(tol > 0.0)) throw ValidationError("classification tolerance must be positive");
  const auto& z = s.positions();
  const auto v = velocities(s);
  const std::size_t n = z.size();

  EquilibriumReport rep;

  double max_speed = 0.0;
  for (const auto& vk : v) max_speed = std::max(max_speed, std::abs(vk));

  // Least-squares omega over all pair constraints v_l - v_k = i w (z_l - z_k).
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const PlanePoint dz = z[l] - z[k];
      const PlanePoint dv = v[l] - v[k];
      num += std::imag(std::conj(dz) * dv);
      den += std::norm(dz);
    }
  }
  const double omega = den > 0.0 ? num / den : 0.0;

  double residual = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const PlanePoint defect = (v[l] - v[k]) - kImagUnit * omega * (z[l] - z[k]);
      residual = std::max(residual, std::abs(defect));
    }
  }
  rep.residual = residual;

  if (max_speed < tol) {
    rep.kind = EquilibriumKind::Absolute;
    rep.omega = 0.0;
    return rep;
  }

  if (residual < tol && std::abs(omega) < tol) {
    PlanePoint mean(0.0, 0.0);
    for (const auto& vk : v) mean += vk;
    mean /= static_cast<double>(n);
    bool all_equal = true;
    for (const auto& vk : v) {
      if (std::abs(vk - mean) >= tol) all_equal = false;
    }
    if (all_equal) {
      rep.kind = EquilibriumKind::RigidTranslation;
      rep.omega = 0.0;
      rep.translation_velocity = mean;
      return rep;
    }
  }

  if (residual < tol && std::abs(omega) >= tol) {
    PlanePoint center(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      center += z[k] - v[k] / (kImagUnit * omega);
    }
    center /= static_cast<double>(n);
    rep.kind = EquilibriumKind::Rotation;
    rep.omega = omega;
    rep.center = center;
    return rep;
  }

  rep.kind = EquilibriumKind::None;
  rep.omega = omega;
  return rep;
}

double oneil_sum(const VortexSystem& s) {
  const auto& g = s.vorticities();
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    for (std::size_t l = k + 1; l < g.size(); ++l) {
      sum += g[k] * g[l];
    }
  }
  return sum;
}

namespace {

using OdeState = std::vector<double>;  // x0, y0, x1, y1, ...

std::vector<PlanePoint> unpack(const OdeState& s) {
  std::vector<PlanePoint> z(s.size() / 2);
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = PlanePoint(s[2 * k], s[2 * k + 1]);
  return z;
}

struct HelmholtzRhs {
  const std::vector<double>& gamma;
  void operator()(const OdeState& state, OdeState& dstate, double /*t*/) const {
    const auto v = velocities_at(unpack(state), gamma);
    dstate.resize(state.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      dstate[2 * k] = std::real(v[k]);
      dstate[2 * k + 1] = std::imag(v[k]);
    }
  }
};

}  // namespace

Trajectory integrate(const VortexSystem& s, double t_end, double rel_tol) {
  if (!(t_end > 0.0)) throw ValidationError("t_end must be positive");
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-3)) {
    throw ValidationError("rel_tol must lie in [1e-14, 1e-3]");
  }

  namespace odeint = boost::numeric::odeint;
  using Stepper = odeint::runge_kutta_dopri5<OdeState>;

  const auto& g = s.vorticities();
  OdeState state(2 * s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    state[2 * k] = std::real(s.positions()[k]);
    state[2 * k + 1] = std::imag(s.positions()[k]);
  }

  const Eigen::MatrixXd d0 = mutual_distances(s);
  const double h0 = conserved(s).hamiltonian;

  Trajectory tr;
  auto observe = [&](const OdeState& x, double t) {
    VortexSystem snap(unpack(x), g);
    const Eigen::MatrixXd d = mutual_distances(snap);
    double ddrift = 0.0;
    for (Eigen::Index a = 0; a < d.rows(); ++a) {
      for (Eigen::Index b = a + 1; b < d.cols(); ++b) {
        ddrift = std::max(ddrift, std::abs(d(a, b) - d0(a, b)) / d0(a, b));
      }
    }
    tr.max_distance_drift = std::max(tr.max_distance_drift, ddrift);
    tr.max_hamiltonian_drift =
        std::max(tr.max_hamiltonian_drift, std::abs(conserved(snap).hamiltonian - h0));
    tr.times.push_back(t);
    tr.states.push_back(std::move(snap));
  };

  // absolute tolerance follows the configuration scale so that small
  // systems are resolved rather than stepped over
  double extent = 0.0;
  for (const auto& z : s.positions()) extent = std::max(extent, std::abs(z));
  const double abs_tol = rel_tol * std::max(extent, 1e-30);

  const double dt0 = std::min(1e-2, t_end / 16.0);
  odeint::integrate_adaptive(odeint::make_controlled<Stepper>(abs_tol, rel_tol),
                             HelmholtzRhs{g}, state, 0.0, t_end, dt0, observe);
  return tr;
}

void write_trajectory_csv(const Trajectory& tr, std::ostream& out) {
  if (tr.states.empty()) throw ValidationError("empty trajectory");
  const std::size_t n = tr.states.front().size();
  out << "t";
  for (std::size_t k = 0; k < n; ++k) out << ",x_" << k << ",y_" << k;
  out << "\n";
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    out << format_double(tr.times[i]);
    for (std::size_t k = 0; k < n; ++k) {
      const PlanePoint z = tr.states[i].positions()[k];
      out << "," << format_double(std::real(z)) << "," << format_double(std::imag(z));
    }
    out << "\n";
  }
}

}  // namespace polyvortex
