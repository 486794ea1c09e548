#include "polyvortex/polygon.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "json.hpp"
#include "polyvortex/errors.hpp"

namespace polyvortex {

const char* to_string(CirculantKind k) { return k == CirculantKind::C ? "C" : "C0"; }

namespace {

constexpr PlanePoint kImagUnit(0.0, 1.0);
constexpr double kKernelEigenvalueTol = 1e-9;
constexpr double kSingularValueCutoff = 1e-10;

void check_ring(int n, PlanePoint s) {
  if (n < 2) throw ValidationError("polygon needs n >= 2, got " + std::to_string(n));
  if (!(std::abs(s) > 0.0)) throw ValidationError("polygon vertex s must be nonzero");
}

}  // namespace

VortexSystem ring_to_system(const PolygonRing& r) {
  check_ring(r.n, r.s);
  if (static_cast<int>(r.vorticities.size()) != r.n) {
    throw ValidationError("ring vorticities must have length n");
  }
  std::vector<PlanePoint> positions(static_cast<std::size_t>(r.n));
  for (int k = 0; k < r.n; ++k) {
    positions[static_cast<std::size_t>(k)] = r.s * root_of_unity(r.n, k);
  }
  return VortexSystem(std::move(positions), r.vorticities);
}

double polygon_omega(int n, PlanePoint s, double total_vorticity) {
  check_ring(n, s);
  return (n - 1) / (2.0 * n * std::norm(s)) * total_vorticity;
}

PlanePoint polygon_field(int n, PlanePoint s, double gamma, PlanePoint z) {
  check_ring(n, s);
  // evaluate in a frame scaled by max(|z|, |s|) so z^n cannot overflow
  const double m = std::max(std::abs(z), std::abs(s));
  const PlanePoint w = std::conj(z) / m;
  const PlanePoint u = std::conj(s) / m;
  const PlanePoint denom = ipow(w, n) - ipow(u, n);
  if (std::abs(denom) < 1e-12) {
    throw SingularFieldError("field evaluated on a vertex rotation image: |z^n - s^n| ~ 0");
  }
  return gamma * kImagUnit * static_cast<double>(n) * ipow(w, n - 1) / denom / m;
}

namespace {

// First row of the circulant matrix behind the rigidity system.
std::vector<PlanePoint> circulant_first_row(int n, CirculantKind kind) {
  std::vector<PlanePoint> row(static_cast<std::size_t>(n));
  const double tail = (n - 1) / (2.0 * n);
  row[0] = (kind == CirculantKind::C) ? PlanePoint(tail, 0.0) : PlanePoint(0.0, 0.0);
  for (int l = 1; l < n; ++l) {
    const PlanePoint rho_l = root_of_unity(n, l);
    PlanePoint c = 1.0 / (1.0 - std::conj(rho_l));
    if (kind == CirculantKind::C) c += tail * rho_l;
    row[static_cast<std::size_t>(l)] = c;
  }
  return row;
}

double closed_form_eigenvalue(int n, CirculantKind kind, int k) {
  if (kind == CirculantKind::C && k == n - 1) return 0.0;
  return (n - 1) / 2.0 - k;
}

}  // namespace

CirculantSpectrum circulant_spectrum(int n, CirculantKind kind) {
  if (n < 2) throw ValidationError("circulant spectrum needs n >= 2");
  const auto row = circulant_first_row(n, kind);

  Eigen::MatrixXcd mat(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int idx = (c - r) % n;
      if (idx < 0) idx += n;
      mat(r, c) = row[static_cast<std::size_t>(idx)];
    }
  }

  CirculantSpectrum sp;
  sp.n = n;
  sp.kind = kind;
  sp.max_residual = 0.0;
  sp.eigenvalues.reserve(static_cast<std::size_t>(n));
  sp.eigenvectors.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXcd v(n);
    std::vector<PlanePoint> v_std(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const PlanePoint e = root_of_unity(n, (j * k) % n);
      v(j) = e;
      v_std[static_cast<std::size_t>(j)] = e;
    }
    const double lambda = closed_form_eigenvalue(n, kind, k);
    const Eigen::VectorXcd defect = mat * v - lambda * v;
    const double res = defect.cwiseAbs().maxCoeff();
    // the numerically applied matrix must reproduce the closed form
    if (res > 1e-10) {
      throw Error("circulant eigenpair defect " + std::to_string(res) + " at n=" +
                  std::to_string(n) + ", k=" + std::to_string(k));
    }
    sp.max_residual = std::max(sp.max_residual, res);
    sp.eigenvalues.push_back(lambda);
    sp.eigenvectors.push_back(std::move(v_std));
  }
  return sp;
}

std::string spectrum_to_json(const CirculantSpectrum& sp) {
  nlohmann::ordered_json j;
  j["n"] = sp.n;
  j["kind"] = to_string(sp.kind);
  j["eigenvalues"] = sp.eigenvalues;
  return j.dump();
}

namespace {

// Real vectors lying in the complex span of the given C^n vectors.
// With coefficients a_j + i b_j, the imaginary part vanishes iff
// [Im w_j | Re w_j] (a; b) = 0; each null direction then yields the real
// vector [Re w_j | -Im w_j] (a; b). An SVD orthonormalizes the result.
Eigen::MatrixXd real_vectors_in_span(const std::vector<Eigen::VectorXcd>& span, int n) {
  const int m = static_cast<int>(span.size());
  if (m == 0) return Eigen::MatrixXd(n, 0);

  Eigen::MatrixXd im_re(n, 2 * m);
  Eigen::MatrixXd re_im(n, 2 * m);
  for (int j = 0; j < m; ++j) {
    im_re.col(j) = span[static_cast<std::size_t>(j)].imag();
    im_re.col(m + j) = span[static_cast<std::size_t>(j)].real();
    re_im.col(j) = span[static_cast<std::size_t>(j)].real();
    re_im.col(m + j) = -span[static_cast<std::size_t>(j)].imag();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(im_re, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = kSingularValueCutoff * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  const Eigen::Index null_dim = 2 * m - rank;
  if (null_dim == 0) return Eigen::MatrixXd(n, 0);
  const Eigen::MatrixXd null_basis = svd.matrixV().rightCols(null_dim);

  const Eigen::MatrixXd candidates = re_im * null_basis;
  Eigen::JacobiSVD<Eigen::MatrixXd> osvd(candidates, Eigen::ComputeFullU);
  const auto& osv = osvd.singularValues();
  const double ocut = kSingularValueCutoff * std::max(1.0, osv.size() > 0 ? osv(0) : 0.0);
  int dim = 0;
  for (Eigen::Index i = 0; i < osv.size(); ++i) {
    if (osv(i) > ocut) ++dim;
  }
  return osvd.matrixU().leftCols(dim);
}

Eigen::VectorXcd fourier_mode(int n, int k) {
  Eigen::VectorXcd v(n);
  for (int j = 0; j < n; ++j) v(j) = root_of_unity(n, (j * k) % n);
  return v;
}

}  // namespace

VorticitySolutionSpace vorticity_solution_space(int n, RingCase ring_case) {
  if (n < 2) throw ValidationError("solution space needs n >= 2");

  VorticitySolutionSpace out;
  out.n = n;
  out.ring_case = ring_case;

  if (ring_case == RingCase::Rotating) {
    // span{(1,...,1)} plus real vectors in the kernel of C
    const auto sp = circulant_spectrum(n, CirculantKind::C);
    std::vector<Eigen::VectorXcd> kernel;
    for (int k = 0; k < n; ++k) {
      if (std::abs(sp.eigenvalues[static_cast<std::size_t>(k)]) < kKernelEigenvalueTol) {
        kernel.push_back(fourier_mode(n, k));
      }
    }
    const Eigen::MatrixXd real_kernel = real_vectors_in_span(kernel, n);
    out.dimension = 1 + static_cast<int>(real_kernel.cols());
    out.basis.resize(n, out.dimension);
    out.basis.col(0) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    if (real_kernel.cols() > 0) out.basis.rightCols(real_kernel.cols()) = real_kernel;
    return out;
  }

  // Translating: C0 Gamma = v * v_{n-1} for some translation velocity v,
  // so Gamma lives in span{v_{n-1}} + ker C0; keep its real vectors.
  const auto sp = circulant_spectrum(n, CirculantKind::C0);
  std::vector<Eigen::VectorXcd> span;
  span.push_back(fourier_mode(n, n - 1));
  for (int k = 0; k < n - 1; ++k) {
    if (std::abs(sp.eigenvalues[static_cast<std::size_t>(k)]) < kKernelEigenvalueTol) {
      span.push_back(fourier_mode(n, k));
    }
  }
  const Eigen::MatrixXd real_space = real_vectors_in_span(span, n);
  out.dimension = static_cast<int>(real_space.cols());
  out.basis = real_space;
  return out;
}

}  // namespace polyvortex
