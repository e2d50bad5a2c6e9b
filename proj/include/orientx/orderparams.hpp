#pragma once

#include <vector>

#include <Eigen/Core>

#include "orientx/geometry.hpp"
#include "orientx/tensor.hpp"

namespace orientx {

/// N particles: positions plus either unit vectors (uniaxial) or rotation
/// matrices (biaxial, d = 3 only).
class ParticleSnapshot {
 public:
  ParticleSnapshot(int dim, bool biaxial);

  void add(const Eigen::VectorXd& position, const UnitVector& direction);
  void add(const Eigen::VectorXd& position, const RotationMatrix3& rotation);

  int dim() const noexcept { return dim_; }
  bool biaxial() const noexcept { return biaxial_; }
  std::size_t size() const noexcept { return positions_.size(); }
  const Eigen::VectorXd& position(std::size_t n) const { return positions_.at(n); }
  const UnitVector& direction(std::size_t n) const { return directions_.at(n); }
  const RotationMatrix3& rotation(std::size_t n) const { return rotations_.at(n); }

 private:
  void check_position(const Eigen::VectorXd& position) const;

  int dim_;
  bool biaxial_;
  std::vector<Eigen::VectorXd> positions_;
  std::vector<UnitVector> directions_;
  std::vector<RotationMatrix3> rotations_;
};

/// Coefficients of the delta sums, with the raw prefactors:
/// 2D 1/2pi, (1/pi) u, (2/pi)(uu - delta/2); 3D 1/4pi, (3/4pi) u,
/// (15/8pi)(uu - delta/3); biaxial 1/8pi^2, (3/8pi^2) R,
/// (5/16pi^2)(R_ij R_kl + R_il R_kj - 2/3 delta_ik delta_jl).
struct OrderParameterSummary {
  int dim = 3;
  bool biaxial = false;
  double rho_total = 0.0;
  RealTensor P;  // rank 1 (uniaxial) or 2 (biaxial)
  RealTensor Q;  // rank 2 (uniaxial) or 4 (biaxial)
};

OrderParameterSummary empty_summary(int dim, bool biaxial);

/// Head-tail symmetrization averages each particle's contribution over +-u.
OrderParameterSummary summary_uniaxial(const ParticleSnapshot& s, bool head_tail = false);
OrderParameterSummary summary_biaxial(const ParticleSnapshot& s);
/// Dispatches on s.biaxial(); head_tail is ignored for biaxial snapshots.
OrderParameterSummary summary(const ParticleSnapshot& s, bool head_tail = false);

/// Eigen-analysis of a uniaxial Q. Eigenvalues descending; the director is the
/// eigenvector of the largest one with its last component (first in 2D)
/// positive, ties broken by the first nonzero component.
struct NematicAnalysis {
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd director;
  bool degenerate = false;  // top eigenvalue gap < 1e-10
};

NematicAnalysis nematic_analysis(const RealTensor& q);

/// Box [origin, origin + size] split into cells[0] x cells[1] (x cells[2]).
struct GridSpec {
  Eigen::VectorXd origin;
  Eigen::VectorXd size;
  std::vector<int> cells;
};

/// Per-cell summaries divided by the cell volume, cells in row-major order
/// (last axis fastest).
struct OrderParameterField {
  GridSpec grid;
  double cell_volume = 0.0;
  std::vector<OrderParameterSummary> cells;
};

OrderParameterField field_from_snapshot(const ParticleSnapshot& s, const GridSpec& grid, bool head_tail = false);

}  // namespace orientx
