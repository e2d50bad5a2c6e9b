#pragma once

#include <cmath>
#include <random>

#include <Eigen/Core>

#include "orientx/convert.hpp"
#include "orientx/expansion.hpp"
#include "orientx/geometry.hpp"
#include "orientx/specfun.hpp"
#include "orientx/tensor.hpp"

namespace orientx::testkit {

using Rng = std::mt19937_64;

inline double uniform(Rng& g, double a = -1.0, double b = 1.0) {
  return std::uniform_real_distribution<double>(a, b)(g);
}

inline Complex random_complex(Rng& g) { return {uniform(g), uniform(g)}; }

inline PolarAngle2D random_polar(Rng& g) { return PolarAngle2D(uniform(g, 0.0, kTwoPi)); }

// Uniform on the sphere (theta from cos theta).
inline SphericalAngles random_spherical(Rng& g) {
  return SphericalAngles(std::acos(uniform(g)), uniform(g, 0.0, kTwoPi));
}

// Haar-uniform rotation.
inline EulerAngles random_euler(Rng& g) {
  return EulerAngles(std::acos(uniform(g)), uniform(g, 0.0, kTwoPi), uniform(g, 0.0, kTwoPi));
}

inline CircularCoeffs random_circular(Rng& g, int L) {
  CircularCoeffs c(L);
  for (int k = -L; k <= L; ++k) c.at(k) = random_complex(g);
  return c;
}

inline SphericalCoeffs random_spherical_coeffs(Rng& g, int L) {
  SphericalCoeffs c(L);
  for (int l = 0; l <= L; ++l) {
    for (int m = -l; m <= l; ++m) c.at(l, m) = random_complex(g);
  }
  return c;
}

inline WignerCoeffs random_wigner(Rng& g, int L) {
  WignerCoeffs c(L);
  for (int l = 0; l <= L; ++l) {
    for (int m = -l; m <= l; ++m) {
      for (int n = -l; n <= l; ++n) c.at(l, m, n) = random_complex(g);
    }
  }
  return c;
}

inline ComplexTensor random_tensor(Rng& g, int dim, int rank) {
  ComplexTensor t(dim, rank);
  for (auto& v : t.data()) v = random_complex(g);
  return t;
}

// Admissible: symmetric and traceless per order.
inline CartesianCoeffsUniaxial random_cartesian_uniaxial(Rng& g, int dim, int L) {
  CartesianCoeffsUniaxial c(dim, L);
  for (int l = 0; l <= L; ++l) c.orders[l] = detrace_symmetric(symmetrize(random_tensor(g, dim, l)));
  return c;
}

inline CartesianCoeffsBiaxial random_cartesian_biaxial(Rng& g, int L) {
  CartesianCoeffsBiaxial c(L);
  for (int l = 0; l <= L; ++l) c.orders[l] = detrace_pairs(symmetrize_pairs(random_tensor(g, 3, 2 * l)));
  return c;
}

inline double max_diff(const CircularCoeffs& a, const CircularCoeffs& b) {
  double e = 0.0;
  for (int k = -a.max_order(); k <= a.max_order(); ++k) e = std::max(e, std::abs(a.at(k) - b.at(k)));
  return e;
}

inline double max_diff(const SphericalCoeffs& a, const SphericalCoeffs& b) {
  double e = 0.0;
  for (int l = 0; l <= a.max_order(); ++l) {
    for (int m = -l; m <= l; ++m) e = std::max(e, std::abs(a.at(l, m) - b.at(l, m)));
  }
  return e;
}

inline double max_diff(const WignerCoeffs& a, const WignerCoeffs& b) {
  double e = 0.0;
  for (int l = 0; l <= a.max_order(); ++l) {
    for (int m = -l; m <= l; ++m) {
      for (int n = -l; n <= l; ++n) e = std::max(e, std::abs(a.at(l, m, n) - b.at(l, m, n)));
    }
  }
  return e;
}

template <class C>
double max_diff_orders(const C& a, const C& b) {
  double e = 0.0;
  for (std::size_t l = 0; l < a.orders.size(); ++l) e = std::max(e, max_abs_diff(a.orders[l], b.orders[l]));
  return e;
}

inline double max_diff(const CartesianCoeffsUniaxial& a, const CartesianCoeffsUniaxial& b) {
  return max_diff_orders(a, b);
}

inline double max_diff(const CartesianCoeffsBiaxial& a, const CartesianCoeffsBiaxial& b) {
  return max_diff_orders(a, b);
}

}  // namespace orientx::testkit
