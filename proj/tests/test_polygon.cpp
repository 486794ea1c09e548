#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "polyvortex/dynamics.hpp"
#include "polyvortex/errors.hpp"
#include "polyvortex/polygon.hpp"

using namespace polyvortex;

namespace {

std::mt19937_64 rng(51202u);

// direct sum over the ring vertices
PlanePoint brute_force_field(int n, PlanePoint s, double gamma, PlanePoint z) {
  PlanePoint sum(0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    const PlanePoint d = z - s * root_of_unity(n, k);
    sum += d / std::norm(d);
  }
  return PlanePoint(0.0, 1.0) * gamma * sum;
}

}  // namespace

TEST_CASE("ring_to_system places the vertices") {
  const VortexSystem pair = ring_to_system({2, {1.0, 0.0}, {1.0, 1.0}});
  CHECK(std::abs(pair.positions()[0] - PlanePoint(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(pair.positions()[1] - PlanePoint(-1.0, 0.0)) < 1e-15);

  const VortexSystem square = ring_to_system({4, {1.0, 0.0}, {1.0, 1.0, 1.0, 1.0}});
  CHECK(std::abs(square.positions()[1] - PlanePoint(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(square.positions()[2] - PlanePoint(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(square.positions()[3] - PlanePoint(0.0, -1.0)) < 1e-15);

  constexpr double pi = std::numbers::pi;
  const VortexSystem tri = ring_to_system({3, {0.0, 2.0}, {1.0, 1.0, 1.0}});
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(tri.positions()[k]) == doctest::Approx(2.0).epsilon(1e-14));
    const double expected = normalize_angle(pi / 2.0 + 2.0 * pi * k / 3.0);
    CHECK(argument(tri.positions()[k]) == doctest::Approx(expected).epsilon(1e-13));
  }

  CHECK_THROWS_AS(ring_to_system({3, {1.0, 0.0}, {1.0, 1.0}}), ValidationError);
  CHECK_THROWS_AS(ring_to_system({1, {1.0, 0.0}, {1.0}}), ValidationError);
}

TEST_CASE("polygon omega closed form") {
  CHECK(polygon_omega(3, {1.0, 0.0}, 6.0) == doctest::Approx(2.0));
  CHECK(polygon_omega(4, {1.0, 0.0}, 4.0) == doctest::Approx(1.5));
  CHECK(polygon_omega(7, {0.3, -0.4}, 0.0) == 0.0);
}

TEST_CASE("polygon field vanishes at the center") {
  for (int n : {2, 3, 5, 8}) {
    CHECK(std::abs(polygon_field(n, {0.7, 0.4}, 2.5, {0.0, 0.0})) == 0.0);
  }
}

TEST_CASE("polygon field co-rotates the sqrt(5) tracer of a pair") {
  const double t = std::sqrt(5.0);
  const PlanePoint z(t, 0.0);
  const PlanePoint field = polygon_field(2, {1.0, 0.0}, 1.0, z);
  const PlanePoint expected = PlanePoint(0.0, 1.0) * 0.5 * z;  // i omega z, omega = 1/2
  CHECK(std::abs(field - expected) < 1e-13);
}

TEST_CASE("polygon field equals the direct vertex sum") {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const PlanePoint s = std::polar(0.5 + 2.0 * (trial % 5) / 5.0, u(rng));
    const PlanePoint z(u(rng), u(rng));
    PlanePoint direct;
    try {
      direct = polygon_field(n, s, 1.7, z);
    } catch (const SingularFieldError&) {
      continue;
    }
    const PlanePoint brute = brute_force_field(n, s, 1.7, z);
    CHECK(std::abs(direct - brute) <= 1e-12 * std::max(1.0, std::abs(brute)));
  }
}

TEST_CASE("polygon field is singular on the vertices") {
  CHECK_THROWS_AS(polygon_field(5, {1.0, 0.0}, 1.0, PlanePoint(1.0, 0.0)),
                  SingularFieldError);
  CHECK_THROWS_AS(polygon_field(5, {1.0, 0.0}, 1.0, root_of_unity(5, 2)),
                  SingularFieldError);
}

TEST_CASE("polygon field superposes over rings") {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const PlanePoint s1 = std::polar(1.0, u(rng));
    const PlanePoint s2 = std::polar(1.7, u(rng));
    const PlanePoint z(u(rng), u(rng));
    try {
      const PlanePoint f1 = polygon_field(n, s1, 1.2, z);
      const PlanePoint f2 = polygon_field(n, s2, -0.8, z);
      const PlanePoint sum =
          brute_force_field(n, s1, 1.2, z) + brute_force_field(n, s2, -0.8, z);
      CHECK(std::abs((f1 + f2) - sum) <= 1e-13 * std::max(1.0, std::abs(sum)));
    } catch (const SingularFieldError&) {
      continue;
    }
  }
}

TEST_CASE("circulant spectrum anchors") {
  const auto c4 = circulant_spectrum(4, CirculantKind::C);
  REQUIRE(c4.eigenvalues.size() == 4);
  CHECK(c4.eigenvalues[0] == doctest::Approx(1.5));
  CHECK(c4.eigenvalues[1] == doctest::Approx(0.5));
  CHECK(c4.eigenvalues[2] == doctest::Approx(-0.5));
  CHECK(c4.eigenvalues[3] == doctest::Approx(0.0));

  const auto c04 = circulant_spectrum(4, CirculantKind::C0);
  CHECK(c04.eigenvalues[0] == doctest::Approx(1.5));
  CHECK(c04.eigenvalues[1] == doctest::Approx(0.5));
  CHECK(c04.eigenvalues[2] == doctest::Approx(-0.5));
  CHECK(c04.eigenvalues[3] == doctest::Approx(-1.5));

  const auto c2 = circulant_spectrum(2, CirculantKind::C);
  CHECK(c2.eigenvalues[0] == doctest::Approx(0.5));
  CHECK(c2.eigenvalues[1] == doctest::Approx(0.0));
}

TEST_CASE("circulant matrix reproduces the closed form up to n = 64") {
  for (int n = 2; n <= 64; ++n) {
    for (CirculantKind kind : {CirculantKind::C, CirculantKind::C0}) {
      const auto sp = circulant_spectrum(n, kind);  // throws if any defect > 1e-10
      CHECK(sp.max_residual < 1e-10);
      for (int k = 0; k < n; ++k) {
        const double closed =
            (kind == CirculantKind::C && k == n - 1) ? 0.0 : (n - 1) / 2.0 - k;
        CHECK(sp.eigenvalues[k] == closed);
      }
    }
  }
}

TEST_CASE("spectrum JSON shape") {
  const std::string j = spectrum_to_json(circulant_spectrum(4, CirculantKind::C0));
  CHECK(j.rfind("{\"n\":4,\"kind\":\"C0\",\"eigenvalues\":", 0) == 0);
}

TEST_CASE("rotating solution space dimensions") {
  const auto s2 = vorticity_solution_space(2, RingCase::Rotating);
  CHECK(s2.dimension == 2);
  const auto s3 = vorticity_solution_space(3, RingCase::Rotating);
  CHECK(s3.dimension == 3);
  for (int n = 4; n <= 12; ++n) {
    const auto sp = vorticity_solution_space(n, RingCase::Rotating);
    CHECK(sp.dimension == 1);
    REQUIRE(sp.basis.cols() == 1);
    // equal vorticities only
    const double c = sp.basis(0, 0);
    CHECK(std::abs(std::abs(c) - 1.0 / std::sqrt(n)) < 1e-12);
    for (int k = 1; k < n; ++k) CHECK(sp.basis(k, 0) == doctest::Approx(c).epsilon(1e-12));
  }
}

TEST_CASE("translating solution space dimensions") {
  CHECK(vorticity_solution_space(2, RingCase::Translating).dimension == 1);
  CHECK(vorticity_solution_space(3, RingCase::Translating).dimension == 2);
  for (int n = 4; n <= 12; ++n) {
    CHECK(vorticity_solution_space(n, RingCase::Translating).dimension == 0);
  }
}

TEST_CASE("solution space bases are orthonormal") {
  for (int n = 2; n <= 12; ++n) {
    for (RingCase rc : {RingCase::Rotating, RingCase::Translating}) {
      const auto sp = vorticity_solution_space(n, rc);
      CHECK(sp.basis.cols() == sp.dimension);
      if (sp.dimension == 0) continue;
      const Eigen::MatrixXd gram = sp.basis.transpose() * sp.basis;
      CHECK((gram - Eigen::MatrixXd::Identity(sp.dimension, sp.dimension))
                .cwiseAbs()
                .maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("solution space vectors generate rigid motions; random unequal ones do not") {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 4; n <= 12; ++n) {
    // admissible: equal vorticities rotate
    const auto sp = vorticity_solution_space(n, RingCase::Rotating);
    std::vector<double> equal(sp.basis.col(0).data(), sp.basis.col(0).data() + n);
    for (auto& g : equal) g *= 2.0;
    const auto rep = classify(ring_to_system({n, {1.0, 0.0}, equal}), 1e-9);
    CHECK(rep.kind == EquilibriumKind::Rotation);
    CHECK(rep.residual < 1e-10);

    // random unequal vorticities do not
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> g;
      double lo = 1e9, hi = -1e9;
      for (int k = 0; k < n; ++k) {
        g.push_back(u(rng));
        lo = std::min(lo, g.back());
        hi = std::max(hi, g.back());
      }
      if (hi - lo < 0.5) {
        --trial;
        continue;
      }
      const auto bad = classify(ring_to_system({n, {1.0, 0.0}, g}), 1e-9);
      CHECK(bad.kind == EquilibriumKind::None);
      CHECK(bad.residual > 1e-6);
    }
  }
}

TEST_CASE("translating space vectors generate rigid translations") {
  for (int n : {2, 3}) {
    const auto sp = vorticity_solution_space(n, RingCase::Translating);
    for (int c = 0; c < sp.dimension; ++c) {
      std::vector<double> g(sp.basis.col(c).data(), sp.basis.col(c).data() + n);
      const auto rep = classify(ring_to_system({n, {1.0, 0.0}, g}), 1e-9);
      CHECK((rep.kind == EquilibriumKind::RigidTranslation ||
             rep.kind == EquilibriumKind::Absolute));
      CHECK(rep.residual < 1e-10);
    }
  }
}

TEST_CASE("ring omega matches the dynamic fit") {
  std::uniform_real_distribution<double> u(0.4, 2.5);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> gdist(0.2, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const PlanePoint s = std::polar(u(rng), ang(rng));
    const double gamma = gdist(rng) * (trial % 2 == 0 ? 1.0 : -1.0);
    const auto rep = classify(ring_to_system({n, s, std::vector<double>(n, gamma)}), 1e-9);
    const double expected = polygon_omega(n, s, n * gamma);
    REQUIRE(rep.kind == EquilibriumKind::Rotation);
    CHECK(rep.omega == doctest::Approx(expected).epsilon(1e-11));
  }
}
