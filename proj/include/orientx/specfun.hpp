#pragma once

#include <complex>

#include <Eigen/Core>

#include "orientx/geometry.hpp"
#include "orientx/tensor.hpp"

namespace orientx {

/// Highest order supported by the angular special functions.
inline constexpr int kMaxOrder = 8;
/// Highest order of the Cartesian (tensor) families.
inline constexpr int kMaxCartesianOrder = 3;

/// n! for 0 <= n <= 2 * kMaxOrder, exact in double.
double factorial(int n);

/// P_lm(x) including the (-1)^m Condon-Shortley factor. Negative m uses
/// P_{l,-m} = (-1)^m (l-m)!/(l+m)! P_lm.
double assoc_legendre(int l, int m, double x);

/// Y_lm(theta, phi) = N_lm P_lm(cos theta) e^{i m phi}.
Complex spherical_harmonic(int l, int m, const SphericalAngles& a);

/// d^l_mn(theta) from the explicit factorial sum.
double wigner_small_d(int l, int m, int n, double theta);

/// D^l_mn = e^{-i m phi} d^l_mn(theta) e^{-i n chi}.
Complex wigner_D(int l, int m, int n, const EulerAngles& w);

/// (2l+1) x (2l+1) block, entry (m + l, n + l) = D^l_mn.
using WignerBlock = Eigen::MatrixXcd;
WignerBlock wigner_block(int l, const EulerAngles& w);

/// Tensor Chebyshev (d = 2) or Legendre (d = 3) polynomial of order l <= 3,
/// evaluated at u. Symmetric and traceless for l > 1.
RealTensor tensor_poly(int d, int l, const UnitVector& u);

}  // namespace orientx
