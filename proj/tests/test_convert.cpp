#include <gtest/gtest.h>

#include "orientx/convert.hpp"
#include "orientx/errors.hpp"
#include "test_support.hpp"

using namespace orientx;
using orientx::testkit::Rng;

TEST(Convert, CircularToCartesianExamples) {
  CircularCoeffs c(2);
  c.at(0) = 1.0;
  auto t = circular_to_cartesian_2d(c);
  EXPECT_NEAR(std::abs(t.orders[0].flat(0) - 1.0), 0.0, 1e-15);
  c = CircularCoeffs(2);
  c.at(1) = c.at(-1) = 1.0;
  t = circular_to_cartesian_2d(c);
  EXPECT_NEAR(std::abs(t.orders[1].at({0}) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.orders[1].at({1})), 0.0, 1e-15);
  c = CircularCoeffs(2);
  c.at(2) = c.at(-2) = 0.5;
  t = circular_to_cartesian_2d(c);
  EXPECT_NEAR(std::abs(t.orders[2].at({0, 0}) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.orders[2].at({1, 1}) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.orders[2].at({0, 1})), 0.0, 1e-15);
}

TEST(Convert, CartesianToCircularExamples) {
  CartesianCoeffsUniaxial t(2, 3);
  t.orders[1].at({0}) = 1.0;
  auto c = cartesian_to_circular_2d(t);
  EXPECT_NEAR(std::abs(c.at(1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.at(-1) - 0.5), 0.0, 1e-15);
  // order 3: f_111 = 1, f_112 = 0; traceless completion gives f_122 = -1, f_222 = 0
  t = CartesianCoeffsUniaxial(2, 3);
  t.orders[3].at({0, 0, 0}) = 1.0;
  t.orders[3].at({0, 1, 1}) = t.orders[3].at({1, 0, 1}) = t.orders[3].at({1, 1, 0}) = -1.0;
  c = cartesian_to_circular_2d(t);
  EXPECT_NEAR(std::abs(c.at(3) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.at(-3) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.at(1)) + std::abs(c.at(-1)), 0.0, 1e-15);
}

TEST(Convert, SphericalToCartesianExamples) {
  SphericalCoeffs c(2);
  c.at(0, 0) = 2 * std::sqrt(kPi);
  EXPECT_NEAR(std::abs(spherical_to_cartesian_3d(c).orders[0].flat(0) - 1.0), 0.0, 1e-15);
  c = SphericalCoeffs(2);
  c.at(1, 0) = 2 * std::sqrt(kPi / 3);
  auto t = spherical_to_cartesian_3d(c);
  EXPECT_NEAR(std::abs(t.orders[1].at({2}) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.orders[1].at({0})) + std::abs(t.orders[1].at({1})), 0.0, 1e-15);
  c = SphericalCoeffs(2);
  c.at(2, 0) = 4.0 / 15.0 * std::sqrt(5 * kPi);
  t = spherical_to_cartesian_3d(c);
  EXPECT_NEAR(t.orders[2].at({0, 0}).real(), -1.0 / 3, 1e-14);
  EXPECT_NEAR(t.orders[2].at({1, 1}).real(), -1.0 / 3, 1e-14);
  EXPECT_NEAR(t.orders[2].at({2, 2}).real(), 2.0 / 3, 1e-14);
}

TEST(Convert, CartesianToSphericalExamples) {
  CartesianCoeffsUniaxial t(3, 2);
  t.orders[1].at({2}) = 1.0;
  EXPECT_NEAR(cartesian_to_spherical_3d(t).at(1, 0).real(), 2.0466534158929770, 1e-14);
  t = CartesianCoeffsUniaxial(3, 2);
  t.orders[2].at({0, 0}) = t.orders[2].at({1, 1}) = -1.0 / 3;
  t.orders[2].at({2, 2}) = 2.0 / 3;
  const auto c = cartesian_to_spherical_3d(t);
  EXPECT_NEAR(c.at(2, 0).real(), 4.0 / 3.0 * std::sqrt(kPi / 5), 1e-14);
  for (int m : {-2, -1, 1, 2}) EXPECT_NEAR(std::abs(c.at(2, m)), 0.0, 1e-15);
}

TEST(Convert, WignerToCartesianExamples) {
  WignerCoeffs c(1);
  c.at(0, 0, 0) = 1.0;
  EXPECT_NEAR(std::abs(wigner_to_cartesian_biaxial(c).orders[0].flat(0) - 1.0), 0.0, 1e-15);
  c = WignerCoeffs(1);
  c.at(1, 0, 0) = 1.0;
  const auto t = wigner_to_cartesian_biaxial(c);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(std::abs(t.orders[1].at({i, j}) - (i == 2 && j == 2 ? 1.0 : 0.0)), 0.0, 1e-15);
    }
  }
  Rng g(41);
  const auto r = wigner_to_cartesian_biaxial(testkit::random_wigner(g, 3));
  for (const auto& o : r.orders) {
    EXPECT_LE(pair_symmetry_defect(o), 1e-12);
    EXPECT_LE(pair_trace_defect(o), 1e-12);
  }
}

TEST(Convert, CartesianToWignerExamples) {
  CartesianCoeffsBiaxial t(1);
  t.orders[1].at({0, 0}) = t.orders[1].at({1, 1}) = 0.5;
  const auto c = cartesian_biaxial_to_wigner(t);
  EXPECT_NEAR(std::abs(c.at(1, -1, -1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.at(1, 1, 1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.at(1, -1, 1)) + std::abs(c.at(1, 1, -1)) + std::abs(c.at(1, 0, 0)), 0.0, 1e-15);
  const auto f = fit_cartesian_biaxial([](const EulerAngles& w) { return Complex(std::cos(w.theta())); }, 3,
                                       default_rule(Manifold::SO3, 3));
  const auto w = cartesian_biaxial_to_wigner(f);
  for (int l = 0; l <= 3; ++l) {
    for (int m = -l; m <= l; ++m) {
      for (int n = -l; n <= l; ++n) {
        EXPECT_NEAR(std::abs(w.at(l, m, n) - (l == 1 && m == 0 && n == 0 ? 1.0 : 0.0)), 0.0, 1e-9);
      }
    }
  }
}

TEST(Convert, RoundTrips) {
  Rng g(42);
  for (int n = 0; n < 20; ++n) {
    const auto a = testkit::random_circular(g, 3);
    EXPECT_LE(testkit::max_diff(cartesian_to_circular_2d(circular_to_cartesian_2d(a)), a), 1e-12);
    const auto b = testkit::random_cartesian_uniaxial(g, 2, 3);
    EXPECT_LE(testkit::max_diff(circular_to_cartesian_2d(cartesian_to_circular_2d(b)), b), 1e-12);
    const auto c = testkit::random_spherical_coeffs(g, 3);
    EXPECT_LE(testkit::max_diff(cartesian_to_spherical_3d(spherical_to_cartesian_3d(c)), c), 1e-12);
    const auto d = testkit::random_cartesian_uniaxial(g, 3, 3);
    EXPECT_LE(testkit::max_diff(spherical_to_cartesian_3d(cartesian_to_spherical_3d(d)), d), 1e-12);
    const auto e = testkit::random_wigner(g, 3);
    EXPECT_LE(testkit::max_diff(cartesian_biaxial_to_wigner(wigner_to_cartesian_biaxial(e)), e), 1e-11);
    const auto f = testkit::random_cartesian_biaxial(g, 3);
    EXPECT_LE(testkit::max_diff(wigner_to_cartesian_biaxial(cartesian_biaxial_to_wigner(f)), f), 1e-11);
  }
}

TEST(Convert, RealTagAndReality) {
  const auto f = fit_spherical([](const SphericalAngles& a) { return Complex(std::sin(a.theta()) * std::cos(a.phi())); },
                               3, default_rule(Manifold::S2, 3));
  SphericalCoeffs c = f;
  c.real = true;
  const auto t = spherical_to_cartesian_3d(c);
  EXPECT_TRUE(t.real);
  EXPECT_LE(reality_defect(t), 1e-13);
  EXPECT_FALSE(spherical_to_cartesian_3d(f).real);
}

TEST(Convert, AdmissionRejectsBadTensors) {
  CartesianCoeffsUniaxial t(3, 2);
  t.orders[2].at({0, 1}) = 1.0;  // not symmetric
  EXPECT_THROW(cartesian_to_spherical_3d(t), InvariantError);
  t = CartesianCoeffsUniaxial(3, 2);
  t.orders[2].at({0, 0}) = 1.0;  // not traceless
  EXPECT_THROW(cartesian_to_spherical_3d(t), InvariantError);
  CartesianCoeffsBiaxial b(2);
  b.orders[2].at({0, 0, 0, 0}) = 1.0;
  EXPECT_THROW(cartesian_biaxial_to_wigner(b), InvariantError);
  try {
    cartesian_to_spherical_3d(t);
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("trace"), std::string::npos) << e.what();
  }
  EXPECT_THROW(cartesian_to_circular_2d(CartesianCoeffsUniaxial(3, 1)), UsageError);
  EXPECT_THROW(circular_to_cartesian_2d(CircularCoeffs(4)), DomainError);
  EXPECT_THROW(spherical_to_cartesian_3d(SphericalCoeffs(5)), DomainError);
}

TEST(Convert, CanonicalizeProjects) {
  Rng g(43);
  const auto a = testkit::random_cartesian_uniaxial(g, 3, 3);
  CartesianCoeffsUniaxial noisy = a;
  noisy.orders[3].at({0, 1, 2}) += 1e-10;
  const auto c = canonicalize(noisy);
  for (const auto& t : c.orders) {
    EXPECT_LE(symmetry_defect(t), 1e-15);
    EXPECT_LE(trace_defect(t), 1e-15);
  }
  EXPECT_LE(testkit::max_diff(c, a), 1e-10);
}
