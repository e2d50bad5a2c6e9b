#include "orientx/expansion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "orientx/errors.hpp"

namespace orientx {

namespace {

void check_max_order(int max_order, int ceiling) {
  if (max_order < 0 || max_order > ceiling) {
    std::ostringstream msg;
    msg << "unsupported order " << max_order << " (max " << ceiling << ")";
    throw DomainError(msg.str());
  }
}

void index_error(const char* what) { throw DomainError(std::string("coefficient index out of range: ") + what); }

double parity(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

CircularCoeffs::CircularCoeffs(int max_order) : max_order_(max_order) {
  if (max_order < 0) {
    throw DomainError("max order must be non-negative");
  }
  values_.assign(static_cast<std::size_t>(2 * max_order + 1), 0.0);
}

Complex& CircularCoeffs::at(int k) {
  if (k < -max_order_ || k > max_order_) index_error("k");
  return values_[static_cast<std::size_t>(k + max_order_)];
}

const Complex& CircularCoeffs::at(int k) const { return const_cast<CircularCoeffs*>(this)->at(k); }

SphericalCoeffs::SphericalCoeffs(int max_order) : max_order_(max_order) {
  check_max_order(max_order, kMaxOrder);
  values_.assign(static_cast<std::size_t>((max_order + 1) * (max_order + 1)), 0.0);
}

Complex& SphericalCoeffs::at(int l, int m) {
  if (l < 0 || l > max_order_ || m < -l || m > l) index_error("(l, m)");
  return values_[static_cast<std::size_t>(l * l + l + m)];
}

const Complex& SphericalCoeffs::at(int l, int m) const { return const_cast<SphericalCoeffs*>(this)->at(l, m); }

namespace {

// sum_{l' < l} (2l'+1)^2
int wigner_offset(int l) { return l * (4 * l * l - 1) / 3; }

}  // namespace

WignerCoeffs::WignerCoeffs(int max_order) : max_order_(max_order) {
  check_max_order(max_order, kMaxOrder);
  values_.assign(static_cast<std::size_t>(wigner_offset(max_order + 1)), 0.0);
}

Complex& WignerCoeffs::at(int l, int m, int n) {
  if (l < 0 || l > max_order_ || m < -l || m > l || n < -l || n > l) index_error("(l, m, n)");
  return values_[static_cast<std::size_t>(wigner_offset(l) + (m + l) * (2 * l + 1) + (n + l))];
}

const Complex& WignerCoeffs::at(int l, int m, int n) const {
  return const_cast<WignerCoeffs*>(this)->at(l, m, n);
}

CartesianCoeffsUniaxial::CartesianCoeffsUniaxial(int dim_, int max_order_) : dim(dim_), max_order(max_order_) {
  if (dim != 2 && dim != 3) {
    throw DomainError("Cartesian dimension must be 2 or 3");
  }
  check_max_order(max_order, kMaxCartesianOrder);
  for (int l = 0; l <= max_order; ++l) {
    orders.emplace_back(dim, l);
  }
}

CartesianCoeffsBiaxial::CartesianCoeffsBiaxial(int max_order_) : max_order(max_order_) {
  check_max_order(max_order, kMaxCartesianOrder);
  for (int l = 0; l <= max_order; ++l) {
    orders.emplace_back(3, 2 * l);
  }
}

CircularCoeffs fit_circular(const S1Function& f, int max_order, const QuadratureRule& rule) {
  require_manifold(rule, Manifold::S1);
  CircularCoeffs c(max_order);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const auto& node = std::get<PolarAngle2D>(rule.nodes[q]);
    const Complex fw = rule.weights[q] * f(node) / kTwoPi;
    for (int k = -max_order; k <= max_order; ++k) {
      c.at(k) += fw * std::polar(1.0, -k * node.phi());
    }
  }
  return c;
}

SphericalCoeffs fit_spherical(const S2Function& f, int max_order, const QuadratureRule& rule) {
  require_manifold(rule, Manifold::S2);
  SphericalCoeffs c(max_order);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const auto& node = std::get<SphericalAngles>(rule.nodes[q]);
    const Complex fw = rule.weights[q] * f(node);
    for (int l = 0; l <= max_order; ++l) {
      for (int m = -l; m <= l; ++m) {
        c.at(l, m) += fw * std::conj(spherical_harmonic(l, m, node));
      }
    }
  }
  return c;
}

WignerCoeffs fit_wigner(const SO3Function& f, int max_order, const QuadratureRule& rule) {
  require_manifold(rule, Manifold::SO3);
  WignerCoeffs c(max_order);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const auto& node = std::get<EulerAngles>(rule.nodes[q]);
    const Complex fw = rule.weights[q] * f(node);
    for (int l = 0; l <= max_order; ++l) {
      const WignerBlock d = wigner_block(l, node);
      const double pref = (2 * l + 1) / (8.0 * kPi * kPi);
      for (int m = -l; m <= l; ++m) {
        for (int n = -l; n <= l; ++n) {
          c.at(l, m, n) += pref * fw * std::conj(d(m + l, n + l));
        }
      }
    }
  }
  return c;
}

CartesianCoeffsUniaxial fit_cartesian_uniaxial(const UnitVectorFunction& f, int d, int max_order,
                                               const QuadratureRule& rule) {
  CartesianCoeffsUniaxial c(d, max_order);
  require_manifold(rule, d == 2 ? Manifold::S1 : Manifold::S2);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const UnitVector u = d == 2 ? unit_vector_2d(std::get<PolarAngle2D>(rule.nodes[q]))
                                : unit_vector_3d(std::get<SphericalAngles>(rule.nodes[q]));
    const Complex fw = rule.weights[q] * f(u);
    for (int l = 0; l <= max_order; ++l) {
      const double pref = d == 2 ? (l == 0 ? 1.0 : 2.0) / kTwoPi : (2 * l + 1) / (4.0 * kPi);
      const RealTensor t = tensor_poly(d, l, u);
      auto& out = c.orders[static_cast<std::size_t>(l)];
      for (std::size_t k = 0; k < t.size(); ++k) {
        out.flat(k) += pref * fw * t.flat(k);
      }
    }
  }
  return c;
}

RealTensor biaxial_kernel(int l, const RotationMatrix3& r) {
  check_max_order(l, kMaxCartesianOrder);
  const double pref = (2 * l + 1) / (8.0 * kPi * kPi);
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  RealTensor t(3, 2 * l);
  for_each_index(3, 2 * l, [&](std::span<const int> idx) {
    double v = 0.0;
    switch (l) {
      case 0:
        v = 1.0;
        break;
      case 1:
        v = r(idx[0], idx[1]);
        break;
      case 2: {
        const int i1 = idx[0], j1 = idx[1], i2 = idx[2], j2 = idx[3];
        v = 0.5 * (r(i1, j1) * r(i2, j2) + r(i1, j2) * r(i2, j1)) - delta(i1, i2) * delta(j1, j2) / 3.0;
        break;
      }
      case 3: {
        const std::array<int, 3> i{idx[0], idx[2], idx[4]};
        const std::array<int, 3> j{idx[1], idx[3], idx[5]};
        std::array<int, 3> p{0, 1, 2};
        double products = 0.0;
        do {
          products += r(i[0], j[static_cast<std::size_t>(p[0])]) * r(i[1], j[static_cast<std::size_t>(p[1])]) *
                      r(i[2], j[static_cast<std::size_t>(p[2])]);
        } while (std::next_permutation(p.begin(), p.end()));
        double traces = 0.0;
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) {
            const auto ia = static_cast<std::size_t>(a), jb = static_cast<std::size_t>(b);
            const auto ia1 = static_cast<std::size_t>((a + 1) % 3), ia2 = static_cast<std::size_t>((a + 2) % 3);
            const auto jb1 = static_cast<std::size_t>((b + 1) % 3), jb2 = static_cast<std::size_t>((b + 2) % 3);
            traces += r(i[ia], j[jb]) * delta(i[ia1], i[ia2]) * delta(j[jb1], j[jb2]);
          }
        }
        v = products / 6.0 - traces / 15.0;
        break;
      }
      default:
        break;
    }
    t(idx) = pref * v;
  });
  return t;
}

CartesianCoeffsBiaxial fit_cartesian_biaxial(const SO3Function& f, int max_order, const QuadratureRule& rule) {
  CartesianCoeffsBiaxial c(max_order);
  require_manifold(rule, Manifold::SO3);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const auto& node = std::get<EulerAngles>(rule.nodes[q]);
    const RotationMatrix3 r = rotation_matrix_3d(node);
    const Complex fw = rule.weights[q] * f(node);
    for (int l = 0; l <= max_order; ++l) {
      const RealTensor k = biaxial_kernel(l, r);
      auto& out = c.orders[static_cast<std::size_t>(l)];
      for (std::size_t e = 0; e < k.size(); ++e) {
        out.flat(e) += fw * k.flat(e);
      }
    }
  }
  return c;
}

Complex evaluate_circular(const CircularCoeffs& c, const PolarAngle2D& phi) {
  Complex acc = 0.0;
  for (int k = -c.max_order(); k <= c.max_order(); ++k) {
    acc += c.at(k) * std::polar(1.0, k * phi.phi());
  }
  return acc;
}

Complex evaluate_spherical(const SphericalCoeffs& c, const SphericalAngles& a) {
  Complex acc = 0.0;
  for (int l = 0; l <= c.max_order(); ++l) {
    for (int m = -l; m <= l; ++m) {
      acc += c.at(l, m) * spherical_harmonic(l, m, a);
    }
  }
  return acc;
}

Complex evaluate_wigner(const WignerCoeffs& c, const EulerAngles& w) {
  Complex acc = 0.0;
  for (int l = 0; l <= c.max_order(); ++l) {
    const WignerBlock d = wigner_block(l, w);
    for (int m = -l; m <= l; ++m) {
      for (int n = -l; n <= l; ++n) {
        acc += c.at(l, m, n) * d(m + l, n + l);
      }
    }
  }
  return acc;
}

Complex evaluate_cartesian_uniaxial(const CartesianCoeffsUniaxial& c, const UnitVector& u) {
  if (u.dim() != c.dim) {
    throw UsageError("unit vector dimension does not match the coefficient dimension");
  }
  Complex acc = 0.0;
  for (const auto& t : c.orders) {
    for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
      double mono = 1.0;
      for (int i : idx) {
        mono *= u[static_cast<std::size_t>(i)];
      }
      acc += t(idx) * mono;
    });
  }
  return acc;
}

Complex evaluate_cartesian_biaxial(const CartesianCoeffsBiaxial& c, const RotationMatrix3& r) {
  Complex acc = 0.0;
  for (const auto& t : c.orders) {
    for_each_index(3, t.rank(), [&](std::span<const int> idx) {
      double mono = 1.0;
      for (std::size_t k = 0; k + 1 < idx.size(); k += 2) {
        mono *= r(idx[k], idx[k + 1]);
      }
      acc += t(idx) * mono;
    });
  }
  return acc;
}

CircularCoeffs rotate_circular(const CircularCoeffs& c, double varphi) {
  CircularCoeffs out = c;
  for (int k = -c.max_order(); k <= c.max_order(); ++k) {
    out.at(k) = c.at(k) * std::polar(1.0, k * varphi);
  }
  return out;
}

SphericalCoeffs rotate_spherical(const SphericalCoeffs& c, const EulerAngles& w) {
  SphericalCoeffs out = c;
  for (int l = 0; l <= c.max_order(); ++l) {
    const WignerBlock d = wigner_block(l, w);
    for (int m = -l; m <= l; ++m) {
      Complex acc = 0.0;
      for (int n = -l; n <= l; ++n) {
        acc += std::conj(d(n + l, m + l)) * c.at(l, n);
      }
      out.at(l, m) = acc;
    }
  }
  return out;
}

WignerCoeffs rotate_wigner(const WignerCoeffs& c, const EulerAngles& w0) {
  WignerCoeffs out = c;
  for (int l = 0; l <= c.max_order(); ++l) {
    const WignerBlock d = wigner_block(l, w0);
    for (int k = -l; k <= l; ++k) {
      for (int n = -l; n <= l; ++n) {
        Complex acc = 0.0;
        for (int m = -l; m <= l; ++m) {
          acc += d(m + l, k + l) * c.at(l, m, n);
        }
        out.at(l, k, n) = acc;
      }
    }
  }
  return out;
}

namespace {

// out_{a..} = sum_{i..} M_{i a} ... t_{i..} on the index positions in `slots`.
ComplexTensor contract_slots(const ComplexTensor& t, const Eigen::MatrixXd& m, const std::vector<int>& slots) {
  ComplexTensor cur = t;
  for (int slot : slots) {
    ComplexTensor next(t.dim(), t.rank());
    std::vector<int> src;
    for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
      src.assign(idx.begin(), idx.end());
      Complex acc = 0.0;
      const int a = idx[static_cast<std::size_t>(slot)];
      for (int i = 0; i < t.dim(); ++i) {
        src[static_cast<std::size_t>(slot)] = i;
        acc += m(i, a) * cur(src);
      }
      next(idx) = acc;
    });
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

CartesianCoeffsUniaxial rotate_cartesian_uniaxial(const CartesianCoeffsUniaxial& c, const Eigen::MatrixXd& r) {
  if (r.rows() != c.dim || r.cols() != c.dim) {
    throw UsageError("rotation matrix dimension does not match the coefficient dimension");
  }
  CartesianCoeffsUniaxial out = c;
  for (int l = 0; l <= c.max_order; ++l) {
    std::vector<int> slots(static_cast<std::size_t>(l));
    for (int k = 0; k < l; ++k) slots[static_cast<std::size_t>(k)] = k;
    out.orders[static_cast<std::size_t>(l)] = contract_slots(c.orders[static_cast<std::size_t>(l)], r, slots);
  }
  return out;
}

CartesianCoeffsUniaxial rotate_cartesian_uniaxial(const CartesianCoeffsUniaxial& c, const RotationMatrix2& r) {
  return rotate_cartesian_uniaxial(c, Eigen::MatrixXd(r.matrix()));
}

CartesianCoeffsUniaxial rotate_cartesian_uniaxial(const CartesianCoeffsUniaxial& c, const RotationMatrix3& r) {
  return rotate_cartesian_uniaxial(c, Eigen::MatrixXd(r.matrix()));
}

CartesianCoeffsBiaxial rotate_cartesian_biaxial(const CartesianCoeffsBiaxial& c, const RotationMatrix3& r0) {
  CartesianCoeffsBiaxial out = c;
  const Eigen::MatrixXd m = r0.matrix();
  for (int l = 0; l <= c.max_order; ++l) {
    std::vector<int> slots;
    for (int k = 0; k < l; ++k) slots.push_back(2 * k);
    out.orders[static_cast<std::size_t>(l)] = contract_slots(c.orders[static_cast<std::size_t>(l)], m, slots);
  }
  return out;
}

double reality_defect(const CircularCoeffs& c) {
  double worst = 0.0;
  for (int k = 0; k <= c.max_order(); ++k) {
    worst = std::max(worst, std::abs(c.at(-k) - std::conj(c.at(k))));
  }
  return worst;
}

double reality_defect(const SphericalCoeffs& c) {
  double worst = 0.0;
  for (int l = 0; l <= c.max_order(); ++l) {
    for (int m = 0; m <= l; ++m) {
      worst = std::max(worst, std::abs(c.at(l, -m) - parity(m) * std::conj(c.at(l, m))));
    }
  }
  return worst;
}

double reality_defect(const WignerCoeffs& c) {
  double worst = 0.0;
  for (int l = 0; l <= c.max_order(); ++l) {
    for (int m = -l; m <= l; ++m) {
      for (int n = -l; n <= l; ++n) {
        worst = std::max(worst, std::abs(c.at(l, -m, -n) - parity(m + n) * std::conj(c.at(l, m, n))));
      }
    }
  }
  return worst;
}

namespace {

template <class Orders>
double imag_defect(const Orders& orders) {
  double worst = 0.0;
  for (const auto& t : orders) {
    for (const auto& v : t.data()) {
      worst = std::max(worst, std::abs(v.imag()));
    }
  }
  return worst;
}

}  // namespace

double reality_defect(const CartesianCoeffsUniaxial& c) { return imag_defect(c.orders); }
double reality_defect(const CartesianCoeffsBiaxial& c) { return imag_defect(c.orders); }

}  // namespace orientx
