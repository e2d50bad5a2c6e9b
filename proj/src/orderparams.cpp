#include "orientx/orderparams.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "orientx/errors.hpp"

namespace orientx {

ParticleSnapshot::ParticleSnapshot(int dim, bool biaxial) : dim_(dim), biaxial_(biaxial) {
  if (dim != 2 && dim != 3) {
    throw DomainError("snapshot dimension must be 2 or 3");
  }
  if (biaxial && dim != 3) {
    throw DomainError("biaxial snapshots need d = 3");
  }
}

void ParticleSnapshot::check_position(const Eigen::VectorXd& position) const {
  if (position.size() != dim_) {
    throw UsageError("particle position dimension does not match the snapshot");
  }
}

void ParticleSnapshot::add(const Eigen::VectorXd& position, const UnitVector& direction) {
  if (biaxial_) {
    throw UsageError("biaxial snapshot needs rotation matrices");
  }
  check_position(position);
  if (direction.dim() != dim_) {
    throw UsageError("orientation dimension does not match the snapshot");
  }
  positions_.push_back(position);
  directions_.push_back(direction);
}

void ParticleSnapshot::add(const Eigen::VectorXd& position, const RotationMatrix3& rotation) {
  if (!biaxial_) {
    throw UsageError("uniaxial snapshot needs unit vectors");
  }
  check_position(position);
  positions_.push_back(position);
  rotations_.push_back(rotation);
}

OrderParameterSummary empty_summary(int dim, bool biaxial) {
  OrderParameterSummary s;
  s.dim = dim;
  s.biaxial = biaxial;
  s.P = RealTensor(dim, biaxial ? 2 : 1);
  s.Q = RealTensor(dim, biaxial ? 4 : 2);
  return s;
}

namespace {

void add_uniaxial(OrderParameterSummary& out, const UnitVector& u, double weight) {
  const int d = out.dim;
  const double rho = d == 2 ? 1.0 / kTwoPi : 1.0 / (4.0 * kPi);
  const double p = d == 2 ? 1.0 / kPi : 3.0 / (4.0 * kPi);
  const double q = d == 2 ? 2.0 / kPi : 15.0 / (8.0 * kPi);
  out.rho_total += weight * rho;
  for (int i = 0; i < d; ++i) {
    out.P.at({i}) += weight * p * u[static_cast<std::size_t>(i)];
    for (int j = 0; j < d; ++j) {
      const double dij = i == j ? 1.0 / d : 0.0;
      out.Q.at({i, j}) += weight * q * (u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)] - dij);
    }
  }
}

void add_particle(OrderParameterSummary& out, const ParticleSnapshot& s, std::size_t n, bool head_tail) {
  if (!s.biaxial()) {
    const UnitVector& u = s.direction(n);
    if (head_tail) {
      add_uniaxial(out, u, 0.5);
      add_uniaxial(out, u.negated(), 0.5);
    } else {
      add_uniaxial(out, u, 1.0);
    }
    return;
  }
  const RotationMatrix3& r = s.rotation(n);
  const double pi2 = kPi * kPi;
  out.rho_total += 1.0 / (8.0 * pi2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.P.at({i, j}) += 3.0 / (8.0 * pi2) * r(i, j);
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          const double dd = (i == k && j == l) ? 2.0 / 3.0 : 0.0;
          out.Q.at({i, j, k, l}) += 5.0 / (16.0 * pi2) * (r(i, j) * r(k, l) + r(i, l) * r(k, j) - dd);
        }
      }
    }
  }
}

}  // namespace

OrderParameterSummary summary_uniaxial(const ParticleSnapshot& s, bool head_tail) {
  if (s.biaxial()) {
    throw UsageError("summary_uniaxial needs a uniaxial snapshot");
  }
  OrderParameterSummary out = empty_summary(s.dim(), false);
  for (std::size_t n = 0; n < s.size(); ++n) {
    add_particle(out, s, n, head_tail);
  }
  return out;
}

OrderParameterSummary summary_biaxial(const ParticleSnapshot& s) {
  if (!s.biaxial()) {
    throw UsageError("summary_biaxial needs a biaxial snapshot");
  }
  OrderParameterSummary out = empty_summary(3, true);
  for (std::size_t n = 0; n < s.size(); ++n) {
    add_particle(out, s, n, false);
  }
  return out;
}

OrderParameterSummary summary(const ParticleSnapshot& s, bool head_tail) {
  return s.biaxial() ? summary_biaxial(s) : summary_uniaxial(s, head_tail);
}

NematicAnalysis nematic_analysis(const RealTensor& q) {
  if (q.rank() != 2 || (q.dim() != 2 && q.dim() != 3)) {
    throw UsageError("nematic analysis needs a 2x2 or 3x3 tensor");
  }
  const int d = q.dim();
  NematicAnalysis out;
  Eigen::VectorXd values(d);
  Eigen::MatrixXd vectors(d, d);
  if (d == 2) {
    Eigen::Matrix2d m;
    m << q.at({0, 0}), q.at({0, 1}), q.at({1, 0}), q.at({1, 1});
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es;
    es.computeDirect(m);
    values = es.eigenvalues();
    vectors = es.eigenvectors();
  } else {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m(i, j) = q.at({i, j});
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
    es.computeDirect(m);
    values = es.eigenvalues();
    vectors = es.eigenvectors();
  }
  // Eigen sorts ascending
  out.eigenvalues = values.reverse();
  Eigen::VectorXd director = vectors.col(d - 1);
  out.degenerate = (values(d - 1) - values(d - 2)) < 1e-10;
  const int key = d == 3 ? 2 : 0;
  double sign_source = director(key);
  if (std::abs(sign_source) < 1e-12) {
    for (int i = 0; i < d; ++i) {
      if (std::abs(director(i)) >= 1e-12) {
        sign_source = director(i);
        break;
      }
    }
  }
  if (sign_source < 0.0) {
    director = -director;
  }
  out.director = director;
  return out;
}

OrderParameterField field_from_snapshot(const ParticleSnapshot& s, const GridSpec& grid, bool head_tail) {
  const int d = s.dim();
  if (grid.origin.size() != d || grid.size.size() != d || static_cast<int>(grid.cells.size()) != d) {
    throw UsageError("grid dimension does not match the snapshot");
  }
  double volume = 1.0;
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) {
    if (!(grid.size(a) > 0.0) || grid.cells[static_cast<std::size_t>(a)] < 1) {
      throw DomainError("grid needs positive extents and at least one cell per axis");
    }
    volume *= grid.size(a) / grid.cells[static_cast<std::size_t>(a)];
    total *= static_cast<std::size_t>(grid.cells[static_cast<std::size_t>(a)]);
  }
  std::vector<std::size_t> outside;
  std::vector<std::size_t> owner(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::size_t flat = 0;
    bool inside = true;
    for (int a = 0; a < d; ++a) {
      const double rel = (s.position(n)(a) - grid.origin(a)) / grid.size(a);
      if (!(rel >= 0.0 && rel <= 1.0)) {
        inside = false;
        break;
      }
      const int nc = grid.cells[static_cast<std::size_t>(a)];
      const int cell = std::min(static_cast<int>(std::floor(rel * nc)), nc - 1);
      flat = flat * static_cast<std::size_t>(nc) + static_cast<std::size_t>(cell);
    }
    if (!inside) {
      outside.push_back(n);
    }
    owner[n] = flat;
  }
  if (!outside.empty()) {
    std::ostringstream msg;
    msg << "particles outside the grid box (0-based indices):";
    for (std::size_t k = 0; k < outside.size() && k < 20; ++k) {
      msg << ' ' << outside[k];
    }
    if (outside.size() > 20) {
      msg << " ... (" << outside.size() << " total)";
    }
    throw DomainError(msg.str());
  }
  OrderParameterField field;
  field.grid = grid;
  field.cell_volume = volume;
  field.cells.assign(total, empty_summary(d, s.biaxial()));
  for (std::size_t n = 0; n < s.size(); ++n) {
    add_particle(field.cells[owner[n]], s, n, head_tail);
  }
  for (auto& c : field.cells) {
    c.rho_total /= volume;
    c.P *= 1.0 / volume;
    c.Q *= 1.0 / volume;
  }
  return field;
}

}  // namespace orientx
