#pragma once

#include "orientx/expansion.hpp"

namespace orientx {

/// Admission tolerance for Cartesian inputs.
inline constexpr double kAdmissionTol = 1e-8;

// Exact orderwise conversions, orders 0..3. Cartesian inputs must be
// symmetric and traceless (pair-wise for biaxial) to kAdmissionTol, otherwise
// InvariantError names the first violated identity. Use canonicalize() to
// project arbitrary tensors first.

CartesianCoeffsUniaxial circular_to_cartesian_2d(const CircularCoeffs& c);
CircularCoeffs cartesian_to_circular_2d(const CartesianCoeffsUniaxial& c);

CartesianCoeffsUniaxial spherical_to_cartesian_3d(const SphericalCoeffs& c);
SphericalCoeffs cartesian_to_spherical_3d(const CartesianCoeffsUniaxial& c);

CartesianCoeffsBiaxial wigner_to_cartesian_biaxial(const WignerCoeffs& c);
WignerCoeffs cartesian_biaxial_to_wigner(const CartesianCoeffsBiaxial& c);

/// Throws InvariantError if any order violates symmetry or tracelessness by more than tol.
void validate_cartesian(const CartesianCoeffsUniaxial& c, double tol = kAdmissionTol);
void validate_cartesian(const CartesianCoeffsBiaxial& c, double tol = kAdmissionTol);

/// Symmetrize and remove traces order by order.
CartesianCoeffsUniaxial canonicalize(const CartesianCoeffsUniaxial& c);
CartesianCoeffsBiaxial canonicalize(const CartesianCoeffsBiaxial& c);

}  // namespace orientx
