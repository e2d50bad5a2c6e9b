#pragma once

#include <functional>
#include <vector>

#include "orientx/geometry.hpp"
#include "orientx/quadrature.hpp"
#include "orientx/specfun.hpp"
#include "orientx/tensor.hpp"

namespace orientx {

/// f_k for k in [-L, L].
class CircularCoeffs {
 public:
  explicit CircularCoeffs(int max_order = 0);
  int max_order() const noexcept { return max_order_; }
  Complex& at(int k);
  const Complex& at(int k) const;
  bool real = false;

 private:
  int max_order_;
  std::vector<Complex> values_;
};

/// f_lm for 0 <= l <= L, |m| <= l.
class SphericalCoeffs {
 public:
  explicit SphericalCoeffs(int max_order = 0);
  int max_order() const noexcept { return max_order_; }
  Complex& at(int l, int m);
  const Complex& at(int l, int m) const;
  bool real = false;

 private:
  int max_order_;
  std::vector<Complex> values_;
};

/// c_lmn for 0 <= l <= L, |m|, |n| <= l.
class WignerCoeffs {
 public:
  explicit WignerCoeffs(int max_order = 0);
  int max_order() const noexcept { return max_order_; }
  Complex& at(int l, int m, int n);
  const Complex& at(int l, int m, int n) const;
  bool real = false;

 private:
  int max_order_;
  std::vector<Complex> values_;
};

/// Per order l a rank-l tensor over d indices.
struct CartesianCoeffsUniaxial {
  CartesianCoeffsUniaxial(int dim = 3, int max_order = 0);
  int dim;
  int max_order;
  bool real = false;
  std::vector<ComplexTensor> orders;
};

/// Per order l a rank-2l tensor, layout (i1 j1 ... il jl).
struct CartesianCoeffsBiaxial {
  explicit CartesianCoeffsBiaxial(int max_order = 0);
  int max_order;
  bool real = false;
  std::vector<ComplexTensor> orders;
};

using UnitVectorFunction = std::function<Complex(const UnitVector&)>;

CircularCoeffs fit_circular(const S1Function& f, int max_order, const QuadratureRule& rule);
SphericalCoeffs fit_spherical(const S2Function& f, int max_order, const QuadratureRule& rule);
WignerCoeffs fit_wigner(const SO3Function& f, int max_order, const QuadratureRule& rule);
/// d = 2 needs an S1 rule, d = 3 an S2 rule. max_order <= 3.
CartesianCoeffsUniaxial fit_cartesian_uniaxial(const UnitVectorFunction& f, int d, int max_order,
                                               const QuadratureRule& rule);
/// Closed-form kernels per order (max_order <= 3).
CartesianCoeffsBiaxial fit_cartesian_biaxial(const SO3Function& f, int max_order, const QuadratureRule& rule);

/// Order-l kernel of the biaxial fit at R, including the (2l+1)/8pi^2 prefactor.
RealTensor biaxial_kernel(int l, const RotationMatrix3& r);

Complex evaluate_circular(const CircularCoeffs& c, const PolarAngle2D& phi);
Complex evaluate_spherical(const SphericalCoeffs& c, const SphericalAngles& a);
Complex evaluate_wigner(const WignerCoeffs& c, const EulerAngles& w);
Complex evaluate_cartesian_uniaxial(const CartesianCoeffsUniaxial& c, const UnitVector& u);
Complex evaluate_cartesian_biaxial(const CartesianCoeffsBiaxial& c, const RotationMatrix3& r);

// Rotations return the coefficients of f'(x) = f(R x), the function seen
// from the rotated frame.

/// f'_k = f_k e^{i k varphi}
CircularCoeffs rotate_circular(const CircularCoeffs& c, double varphi);
/// f'_l = D^l(w)^dagger f_l
SphericalCoeffs rotate_spherical(const SphericalCoeffs& c, const EulerAngles& w);
/// f'(R) = f(R0 R): c'_l = D^l(R0)^T c_l
WignerCoeffs rotate_wigner(const WignerCoeffs& c, const EulerAngles& w0);
/// every index contracted with R^T: f'_{j..} = sum_i R_{ij} ... f_{i..}
CartesianCoeffsUniaxial rotate_cartesian_uniaxial(const CartesianCoeffsUniaxial& c, const Eigen::MatrixXd& r);
CartesianCoeffsUniaxial rotate_cartesian_uniaxial(const CartesianCoeffsUniaxial& c, const RotationMatrix2& r);
CartesianCoeffsUniaxial rotate_cartesian_uniaxial(const CartesianCoeffsUniaxial& c, const RotationMatrix3& r);
/// f'(R) = f(R0 R): i-indices contracted with R0^T
CartesianCoeffsBiaxial rotate_cartesian_biaxial(const CartesianCoeffsBiaxial& c, const RotationMatrix3& r0);

// Largest violation of the reality relation of each family:
// f_{-k} = conj f_k, f_{l,-m} = (-1)^m conj f_lm,
// c_{l,-m,-n} = (-1)^{m+n} conj c_lmn, Cartesian imaginary parts zero.
double reality_defect(const CircularCoeffs& c);
double reality_defect(const SphericalCoeffs& c);
double reality_defect(const WignerCoeffs& c);
double reality_defect(const CartesianCoeffsUniaxial& c);
double reality_defect(const CartesianCoeffsBiaxial& c);

}  // namespace orientx
