#pragma once

#include <array>
#include <cstddef>
#include <numbers>

#include <Eigen/Core>

namespace orientx {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any finite angle onto [0, 2pi). Idempotent.
double normalize_angle(double angle);

/// Polar angle of a 2D orientation, normalized to [0, 2pi).
class PolarAngle2D {
 public:
  explicit PolarAngle2D(double phi);
  double phi() const noexcept { return phi_; }

 private:
  double phi_;
};

/// Spherical coordinates of a 3D orientation. theta must lie in [0, pi];
/// values outside are rejected instead of reflected since reflection would
/// also shift phi. phi is normalized to [0, 2pi).
class SphericalAngles {
 public:
  SphericalAngles(double theta, double phi);
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

 private:
  double theta_;
  double phi_;
};

/// Euler triple (theta, phi, chi) of the z-y-z convention
/// R = R_z(phi) R_y(theta) R_z(chi). Same range rules as SphericalAngles,
/// chi normalized like phi.
class EulerAngles {
 public:
  EulerAngles(double theta, double phi, double chi);
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  double chi() const noexcept { return chi_; }

 private:
  double theta_;
  double phi_;
  double chi_;
};

/// Unit vector in 2 or 3 dimensions. Construction from raw components checks
/// the norm to 1e-12.
class UnitVector {
 public:
  static UnitVector from_components(const Eigen::VectorXd& components, double tol = 1e-12);

  int dim() const noexcept { return dim_; }
  double operator[](std::size_t i) const { return c_[i]; }
  Eigen::VectorXd vector() const;
  UnitVector negated() const;

 private:
  friend UnitVector unit_vector_2d(const PolarAngle2D&);
  friend UnitVector unit_vector_3d(const SphericalAngles&);
  UnitVector(int dim, std::array<double, 3> c) : dim_(dim), c_(c) {}

  int dim_;
  std::array<double, 3> c_;
};

class RotationMatrix2 {
 public:
  /// Checks R^T R = I and det R = 1 to `tol`.
  static RotationMatrix2 from_matrix(const Eigen::Matrix2d& m, double tol = 1e-12);
  const Eigen::Matrix2d& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  friend RotationMatrix2 rotation_matrix_2d(double);
  explicit RotationMatrix2(const Eigen::Matrix2d& m) : m_(m) {}
  Eigen::Matrix2d m_;
};

class RotationMatrix3 {
 public:
  static RotationMatrix3 identity();
  /// Checks R^T R = I and det R = 1 to `tol`.
  static RotationMatrix3 from_matrix(const Eigen::Matrix3d& m, double tol = 1e-12);
  const Eigen::Matrix3d& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  RotationMatrix3 operator*(const RotationMatrix3& other) const;
  RotationMatrix3 transpose() const;

 private:
  friend RotationMatrix3 rotation_matrix_3d(const EulerAngles&);
  friend RotationMatrix3 elementary_rotation_y(double);
  friend RotationMatrix3 elementary_rotation_z(double);
  explicit RotationMatrix3(const Eigen::Matrix3d& m) : m_(m) {}
  Eigen::Matrix3d m_;
};

/// (cos phi, sin phi)
UnitVector unit_vector_2d(const PolarAngle2D& phi);
/// (sin theta cos phi, sin theta sin phi, cos theta)
UnitVector unit_vector_3d(const SphericalAngles& a);

/// [[cos, -sin], [sin, cos]]
RotationMatrix2 rotation_matrix_2d(double phi);
/// Closed-form z-y-z matrix; equals R_z(phi) R_y(theta) R_z(chi).
RotationMatrix3 rotation_matrix_3d(const EulerAngles& w);
RotationMatrix3 elementary_rotation_y(double angle);
RotationMatrix3 elementary_rotation_z(double angle);

/// Inverse of rotation_matrix_3d. At the poles (sin theta = 0) only phi + chi
/// (or phi - chi) is determined; chi is then set to 0.
EulerAngles euler_angles_from_matrix(const RotationMatrix3& r);

/// Recovers (theta, phi) of a 3D unit vector; phi = 0 on the poles.
SphericalAngles spherical_angles_of(const UnitVector& u);

}  // namespace orientx
