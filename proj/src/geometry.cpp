#include "orientx/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "orientx/errors.hpp"

namespace orientx {

double normalize_angle(double angle) {
  if (!std::isfinite(angle)) {
    throw DomainError("angle must be finite");
  }
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  // fmod of a tiny negative number plus 2pi can round up to 2pi itself
  if (r >= kTwoPi) {
    r = 0.0;
  }
  return r;
}

namespace {

double checked_theta(double theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
    std::ostringstream msg;
    msg << "theta = " << theta << " outside [0, pi]";
    throw DomainError(msg.str());
  }
  return theta;
}

template <class Matrix>
void check_rotation(const Matrix& m, double tol) {
  const Matrix gram = m.transpose() * m;
  const double ortho = (gram - Matrix::Identity()).cwiseAbs().maxCoeff();
  const double det = m.determinant();
  if (!(ortho <= tol) || !(std::abs(det - 1.0) <= tol)) {
    std::ostringstream msg;
    msg << "matrix is not a proper rotation (|R^T R - I| = " << ortho << ", det = " << det << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

PolarAngle2D::PolarAngle2D(double phi) : phi_(normalize_angle(phi)) {}

SphericalAngles::SphericalAngles(double theta, double phi)
    : theta_(checked_theta(theta)), phi_(normalize_angle(phi)) {}

EulerAngles::EulerAngles(double theta, double phi, double chi)
    : theta_(checked_theta(theta)), phi_(normalize_angle(phi)), chi_(normalize_angle(chi)) {}

UnitVector UnitVector::from_components(const Eigen::VectorXd& components, double tol) {
  const auto n = components.size();
  if (n != 2 && n != 3) {
    throw DomainError("unit vectors must have 2 or 3 components");
  }
  if (!(std::abs(components.norm() - 1.0) <= tol)) {
    std::ostringstream msg;
    msg << "vector norm " << components.norm() << " differs from 1";
    throw DomainError(msg.str());
  }
  std::array<double, 3> c{0.0, 0.0, 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i)] = components(i);
  }
  return UnitVector(static_cast<int>(n), c);
}

Eigen::VectorXd UnitVector::vector() const {
  Eigen::VectorXd v(dim_);
  for (int i = 0; i < dim_; ++i) {
    v(i) = c_[static_cast<std::size_t>(i)];
  }
  return v;
}

UnitVector UnitVector::negated() const { return UnitVector(dim_, {-c_[0], -c_[1], -c_[2]}); }

RotationMatrix2 RotationMatrix2::from_matrix(const Eigen::Matrix2d& m, double tol) {
  check_rotation(m, tol);
  return RotationMatrix2(m);
}

RotationMatrix3 RotationMatrix3::identity() { return RotationMatrix3(Eigen::Matrix3d::Identity()); }

RotationMatrix3 RotationMatrix3::from_matrix(const Eigen::Matrix3d& m, double tol) {
  check_rotation(m, tol);
  return RotationMatrix3(m);
}

RotationMatrix3 RotationMatrix3::operator*(const RotationMatrix3& other) const {
  return RotationMatrix3(m_ * other.m_);
}

RotationMatrix3 RotationMatrix3::transpose() const { return RotationMatrix3(m_.transpose()); }

UnitVector unit_vector_2d(const PolarAngle2D& phi) {
  return UnitVector(2, {std::cos(phi.phi()), std::sin(phi.phi()), 0.0});
}

UnitVector unit_vector_3d(const SphericalAngles& a) {
  const double st = std::sin(a.theta());
  return UnitVector(3, {st * std::cos(a.phi()), st * std::sin(a.phi()), std::cos(a.theta())});
}

RotationMatrix2 rotation_matrix_2d(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Eigen::Matrix2d m;
  m << c, -s, s, c;
  return RotationMatrix2(m);
}

RotationMatrix3 rotation_matrix_3d(const EulerAngles& w) {
  const double ct = std::cos(w.theta()), st = std::sin(w.theta());
  const double cp = std::cos(w.phi()), sp = std::sin(w.phi());
  const double cc = std::cos(w.chi()), sc = std::sin(w.chi());
  Eigen::Matrix3d m;
  m << cp * ct * cc - sp * sc, -cp * ct * sc - sp * cc, cp * st,  //
      sp * ct * cc + cp * sc, -sp * ct * sc + cp * cc, sp * st,   //
      -st * cc, st * sc, ct;
  return RotationMatrix3(m);
}

RotationMatrix3 elementary_rotation_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix3d m;
  m << c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c;
  return RotationMatrix3(m);
}

RotationMatrix3 elementary_rotation_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix3d m;
  m << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
  return RotationMatrix3(m);
}

EulerAngles euler_angles_from_matrix(const RotationMatrix3& r) {
  const auto& m = r.matrix();
  const double theta = std::acos(std::clamp(m(2, 2), -1.0, 1.0));
  const double st = std::hypot(m(0, 2), m(1, 2));
  if (st < 1e-12) {
    // R = R_z(phi +- chi) (times diag(-1, 1, -1) when theta = pi)
    const double sign = m(2, 2) > 0.0 ? 1.0 : -1.0;
    const double phi = std::atan2(sign * m(1, 0), sign * m(0, 0));
    return EulerAngles(m(2, 2) > 0.0 ? 0.0 : kPi, phi, 0.0);
  }
  const double phi = std::atan2(m(1, 2), m(0, 2));
  const double chi = std::atan2(m(2, 1), -m(2, 0));
  return EulerAngles(theta, phi, chi);
}

SphericalAngles spherical_angles_of(const UnitVector& u) {
  if (u.dim() != 3) {
    throw DomainError("spherical angles need a 3D unit vector");
  }
  const double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
  const double rho = std::hypot(u[0], u[1]);
  const double phi = rho < 1e-300 ? 0.0 : std::atan2(u[1], u[0]);
  return SphericalAngles(theta, phi);
}

}  // namespace orientx
