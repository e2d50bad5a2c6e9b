#include "orientx/convert.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "orientx/errors.hpp"

namespace orientx {

namespace {

// One output component expressed through input components.
// Angular indices are [k], [l, m] or [l, m, n]; Cartesian indices are the
// 1-based digits i1 i2 ... (uniaxial) or i1 j1 i2 j2 ... (biaxial).
struct Term {
  std::vector<int> index;
  Complex weight;
};

struct Row {
  std::vector<int> index;
  std::vector<Term> terms;
};

using WignerRow = Row;
using CartesianRow = Row;

Complex q(int p, int r, int s = 1) { return {p * std::sqrt(static_cast<double>(s)) / r, 0.0}; }
Complex qi(int p, int r, int s = 1) { return {0.0, p * std::sqrt(static_cast<double>(s)) / r}; }

#include "convert_tables_biaxial.inc"

const Complex kI{0.0, 1.0};

const std::vector<Row>& circular_from_cartesian_rows() {
  static const std::vector<Row> rows = {
      {{0}, {{{}, 1.0}}},
      {{1}, {{{1}, 0.5}, {{2}, -0.5 * kI}}},
      {{-1}, {{{1}, 0.5}, {{2}, 0.5 * kI}}},
      {{2}, {{{1, 1}, 0.5}, {{1, 2}, -0.5 * kI}}},
      {{-2}, {{{1, 1}, 0.5}, {{1, 2}, 0.5 * kI}}},
      {{3}, {{{1, 1, 1}, 0.5}, {{1, 1, 2}, -0.5 * kI}}},
      {{-3}, {{{1, 1, 1}, 0.5}, {{1, 1, 2}, 0.5 * kI}}},
  };
  return rows;
}

const std::vector<Row>& cartesian_from_circular_rows() {
  static const std::vector<Row> rows = {
      {{}, {{{0}, 1.0}}},
      {{1}, {{{1}, 1.0}, {{-1}, 1.0}}},
      {{2}, {{{1}, kI}, {{-1}, -kI}}},
      {{1, 1}, {{{2}, 1.0}, {{-2}, 1.0}}},
      {{1, 2}, {{{2}, kI}, {{-2}, -kI}}},
      {{1, 1, 1}, {{{3}, 1.0}, {{-3}, 1.0}}},
      {{1, 1, 2}, {{{3}, kI}, {{-3}, -kI}}},
  };
  return rows;
}

const std::vector<Row>& spherical_from_cartesian_rows() {
  const double pi = kPi;
  const double a1 = std::sqrt(2.0 * pi / 3.0);
  const double a21 = 2.0 * std::sqrt(2.0 * pi / 15.0);
  const double a22 = std::sqrt(2.0 * pi / 15.0);
  const double a31 = std::sqrt(3.0 * pi / 7.0);
  const double a32 = std::sqrt(6.0 * pi / 35.0);
  const double a33 = std::sqrt(pi / 35.0);
  static const std::vector<Row> rows = {
      {{0, 0}, {{{}, 2.0 * std::sqrt(pi)}}},
      {{1, 0}, {{{3}, 2.0 * std::sqrt(pi / 3.0)}}},
      {{1, 1}, {{{1}, -a1}, {{2}, a1 * kI}}},
      {{1, -1}, {{{1}, a1}, {{2}, a1 * kI}}},
      {{2, 0}, {{{3, 3}, 2.0 * std::sqrt(pi / 5.0)}}},
      {{2, 1}, {{{1, 3}, -a21}, {{2, 3}, a21 * kI}}},
      {{2, -1}, {{{1, 3}, a21}, {{2, 3}, a21 * kI}}},
      {{2, 2}, {{{1, 1}, a22}, {{2, 2}, -a22}, {{1, 2}, -2.0 * a22 * kI}}},
      {{2, -2}, {{{1, 1}, a22}, {{2, 2}, -a22}, {{1, 2}, 2.0 * a22 * kI}}},
      {{3, 0}, {{{3, 3, 3}, 2.0 * std::sqrt(pi / 7.0)}}},
      {{3, 1}, {{{1, 3, 3}, -a31}, {{2, 3, 3}, a31 * kI}}},
      {{3, -1}, {{{1, 3, 3}, a31}, {{2, 3, 3}, a31 * kI}}},
      {{3, 2}, {{{1, 1, 3}, a32}, {{2, 2, 3}, -a32}, {{1, 2, 3}, -2.0 * a32 * kI}}},
      {{3, -2}, {{{1, 1, 3}, a32}, {{2, 2, 3}, -a32}, {{1, 2, 3}, 2.0 * a32 * kI}}},
      {{3, 3}, {{{1, 1, 1}, -a33}, {{1, 2, 2}, 3.0 * a33}, {{1, 1, 2}, 3.0 * a33 * kI}, {{2, 2, 2}, -a33 * kI}}},
      {{3, -3}, {{{1, 1, 1}, a33}, {{1, 2, 2}, -3.0 * a33}, {{1, 1, 2}, 3.0 * a33 * kI}, {{2, 2, 2}, -a33 * kI}}},
  };
  return rows;
}

const std::vector<Row>& cartesian_from_spherical_rows() {
  const double pi = kPi;
  const double b1 = 0.5 * std::sqrt(3.0 / (2.0 * pi));
  const double b20 = 0.125 * std::sqrt(5.0 / pi);
  const double b2 = 0.25 * std::sqrt(15.0 / (2.0 * pi));
  const double b3a = 0.125 * std::sqrt(7.0 / pi);
  const double b3b = std::sqrt(21.0 / pi) / 24.0;
  const double b3c = std::sqrt(42.0 / pi) / 24.0;
  const double b3d = 0.25 * std::sqrt(35.0 / (6.0 * pi));
  const double r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r6 = std::sqrt(6.0), r15 = std::sqrt(15.0);
  static const std::vector<Row> rows = {
      {{}, {{{0, 0}, 1.0 / (2.0 * std::sqrt(pi))}}},
      {{1}, {{{1, 1}, -b1}, {{1, -1}, b1}}},
      {{2}, {{{1, 1}, -b1 * kI}, {{1, -1}, -b1 * kI}}},
      {{3}, {{{1, 0}, 0.5 * std::sqrt(3.0 / pi)}}},
      {{1, 1}, {{{2, 0}, -2.0 * b20}, {{2, 2}, b20 * r6}, {{2, -2}, b20 * r6}}},
      {{1, 2}, {{{2, 2}, b2 * kI}, {{2, -2}, -b2 * kI}}},
      {{1, 3}, {{{2, 1}, -b2}, {{2, -1}, b2}}},
      {{2, 2}, {{{2, 0}, -2.0 * b20}, {{2, 2}, -b20 * r6}, {{2, -2}, -b20 * r6}}},
      {{2, 3}, {{{2, 1}, -b2 * kI}, {{2, -1}, -b2 * kI}}},
      {{1, 1, 1}, {{{3, 1}, b3a * r3}, {{3, -1}, -b3a * r3}, {{3, 3}, -b3a * r5}, {{3, -3}, b3a * r5}}},
      {{1, 1, 2},
       {{{3, 1}, b3b * kI}, {{3, -1}, b3b * kI}, {{3, 3}, -b3b * r15 * kI}, {{3, -3}, -b3b * r15 * kI}}},
      {{1, 1, 3}, {{{3, 0}, -b3c * r6}, {{3, 2}, b3c * r5}, {{3, -2}, b3c * r5}}},
      {{1, 2, 2}, {{{3, 1}, b3b}, {{3, -1}, -b3b}, {{3, 3}, b3b * r15}, {{3, -3}, -b3b * r15}}},
      {{1, 2, 3}, {{{3, 2}, b3d * kI}, {{3, -2}, -b3d * kI}}},
      {{2, 2, 2},
       {{{3, 1}, b3a * r3 * kI}, {{3, -1}, b3a * r3 * kI}, {{3, 3}, b3a * r5 * kI}, {{3, -3}, b3a * r5 * kI}}},
      {{2, 2, 3}, {{{3, 0}, -b3c * r6}, {{3, 2}, -b3c * r5}, {{3, -2}, -b3c * r5}}},
  };
  return rows;
}

int cartesian_order(const std::vector<int>& digits, bool biaxial) {
  return static_cast<int>(digits.size()) / (biaxial ? 2 : 1);
}

std::vector<int> zero_based(const std::vector<int>& digits) {
  std::vector<int> idx(digits);
  for (auto& v : idx) {
    --v;
  }
  return idx;
}

// Which index positions may be permuted and which pairs carry a trace
// identity, in the order the identities are applied.
struct Structure {
  std::vector<std::pair<int, int>> swaps;
  std::vector<std::pair<int, int>> traces;
};

Structure uniaxial_structure(int l) {
  Structure s;
  for (int a = 0; a < l; ++a) {
    for (int b = a + 1; b < l; ++b) {
      s.swaps.emplace_back(a, b);
      s.traces.emplace_back(a, b);
    }
  }
  return s;
}

Structure biaxial_structure(int l) {
  Structure s;
  for (int group = 0; group < 2; ++group) {
    for (int a = 0; a < l; ++a) {
      for (int b = a + 1; b < l; ++b) {
        s.swaps.emplace_back(2 * a + group, 2 * b + group);
        s.traces.emplace_back(2 * a + group, 2 * b + group);
      }
    }
  }
  return s;
}

// Fills every component not in `known` from the symmetry identities, then
// the trace identities (last index value expressed through the others),
// repeating until nothing changes.
void complete(ComplexTensor& t, std::vector<char>& known, const Structure& s) {
  const int d = t.dim();
  const int last = d - 1;
  bool changed = true;
  std::vector<int> other;
  while (changed) {
    changed = false;
    bool sym_changed = true;
    while (sym_changed) {
      sym_changed = false;
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (known[k]) continue;
        const std::vector<int> idx = t.unflatten(k);
        for (const auto& [a, b] : s.swaps) {
          other = idx;
          std::swap(other[static_cast<std::size_t>(a)], other[static_cast<std::size_t>(b)]);
          const std::size_t ko = t.flat_index(other);
          if (known[ko]) {
            t.flat(k) = t.flat(ko);
            known[k] = 1;
            sym_changed = changed = true;
            break;
          }
        }
      }
    }
    for (const auto& [a, b] : s.traces) {
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (known[k]) continue;
        const std::vector<int> idx = t.unflatten(k);
        if (idx[static_cast<std::size_t>(a)] != last || idx[static_cast<std::size_t>(b)] != last) continue;
        Complex acc = 0.0;
        bool ready = true;
        other = idx;
        for (int v = 0; v < last && ready; ++v) {
          other[static_cast<std::size_t>(a)] = v;
          other[static_cast<std::size_t>(b)] = v;
          const std::size_t ko = t.flat_index(other);
          ready = known[ko] != 0;
          acc += t.flat(ko);
        }
        if (ready) {
          t.flat(k) = -acc;
          known[k] = 1;
          changed = true;
        }
      }
    }
  }
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!known[k]) {
      throw std::logic_error("conversion table leaves component " + format_index(t.unflatten(k)) + " undetermined");
    }
  }
}

std::string describe_swap(const std::vector<int>& idx, int a, int b) {
  std::vector<int> other = idx;
  std::swap(other[static_cast<std::size_t>(a)], other[static_cast<std::size_t>(b)]);
  return "f" + format_index(idx) + " = f" + format_index(other);
}

// Throws InvariantError naming the worst violated identity if above tol.
void check_structure(const ComplexTensor& t, const Structure& s, int l, double tol, const char* family) {
  double worst = 0.0;
  std::string what;
  std::vector<int> other;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const std::vector<int> idx = t.unflatten(k);
    for (const auto& [a, b] : s.swaps) {
      other = idx;
      std::swap(other[static_cast<std::size_t>(a)], other[static_cast<std::size_t>(b)]);
      const double e = std::abs(t.flat(k) - t(other));
      if (e > worst) {
        worst = e;
        what = "symmetry " + describe_swap(idx, a, b);
      }
    }
  }
  const int r = t.rank();
  for (const auto& [a, b] : s.traces) {
    for_each_index(t.dim(), r - 2, [&](std::span<const int> rest) {
      Complex acc = 0.0;
      std::vector<int> full(static_cast<std::size_t>(r));
      for (int v = 0; v < t.dim(); ++v) {
        std::size_t q = 0;
        for (int p = 0; p < r; ++p) {
          full[static_cast<std::size_t>(p)] = (p == a || p == b) ? v : rest[q++];
        }
        acc += t(full);
      }
      if (std::abs(acc) > worst) {
        worst = std::abs(acc);
        std::ostringstream m;
        m << "trace over index positions " << a + 1 << " and " << b + 1 << " vanishes (remaining indices "
          << format_index(rest) << ")";
        what = m.str();
      }
    });
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << family << " order " << l << ": identity " << what << " violated by " << worst;
    throw InvariantError(msg.str());
  }
}

void check_orders(int max_order) {
  if (max_order > kMaxCartesianOrder) {
    std::ostringstream msg;
    msg << "unsupported order " << max_order << " for conversion (max " << kMaxCartesianOrder << ")";
    throw DomainError(msg.str());
  }
}

template <class AngularGet>
void fill_cartesian(std::vector<ComplexTensor>& orders, const std::vector<Row>& rows, bool biaxial,
                    const AngularGet& get, int max_order, const char* family) {
  for (int l = 0; l <= max_order; ++l) {
    auto& t = orders[static_cast<std::size_t>(l)];
    std::vector<char> known(t.size(), 0);
    for (const auto& row : rows) {
      if (cartesian_order(row.index, biaxial) != l) continue;
      Complex acc = 0.0;
      for (const auto& term : row.terms) {
        acc += term.weight * get(term.index);
      }
      const std::size_t k = t.flat_index(zero_based(row.index));
      t.flat(k) = acc;
      known[k] = 1;
    }
    const Structure s = biaxial ? biaxial_structure(l) : uniaxial_structure(l);
    complete(t, known, s);
    // a table inconsistency would show up here
    check_structure(t, s, l, 1e-10, family);
  }
}

template <class AngularSet>
void fill_angular(const std::vector<ComplexTensor>& orders, const std::vector<Row>& rows, bool biaxial,
                  const AngularSet& set, int max_order) {
  for (const auto& row : rows) {
    const int l = row.index.size() == 1 ? std::abs(row.index[0]) : row.index[0];
    if (l > max_order) continue;
    Complex acc = 0.0;
    for (const auto& term : row.terms) {
      const int lt = cartesian_order(term.index, biaxial);
      acc += term.weight * orders[static_cast<std::size_t>(lt)](zero_based(term.index));
    }
    set(row.index, acc);
  }
}

}  // namespace

void validate_cartesian(const CartesianCoeffsUniaxial& c, double tol) {
  for (int l = 2; l <= c.max_order; ++l) {
    check_structure(c.orders[static_cast<std::size_t>(l)], uniaxial_structure(l), l, tol,
                    c.dim == 2 ? "cartesian2d" : "cartesian3d");
  }
}

void validate_cartesian(const CartesianCoeffsBiaxial& c, double tol) {
  for (int l = 2; l <= c.max_order; ++l) {
    check_structure(c.orders[static_cast<std::size_t>(l)], biaxial_structure(l), l, tol, "cartesian_biaxial");
  }
}

CartesianCoeffsUniaxial canonicalize(const CartesianCoeffsUniaxial& c) {
  CartesianCoeffsUniaxial out = c;
  for (auto& t : out.orders) {
    t = detrace_symmetric(symmetrize(t));
  }
  return out;
}

CartesianCoeffsBiaxial canonicalize(const CartesianCoeffsBiaxial& c) {
  CartesianCoeffsBiaxial out = c;
  for (auto& t : out.orders) {
    t = detrace_pairs(symmetrize_pairs(t));
  }
  return out;
}

CartesianCoeffsUniaxial circular_to_cartesian_2d(const CircularCoeffs& c) {
  check_orders(c.max_order());
  CartesianCoeffsUniaxial out(2, c.max_order());
  out.real = c.real;
  fill_cartesian(out.orders, cartesian_from_circular_rows(), false,
                 [&](const std::vector<int>& i) { return c.at(i[0]); }, c.max_order(), "cartesian2d");
  return out;
}

CircularCoeffs cartesian_to_circular_2d(const CartesianCoeffsUniaxial& c) {
  if (c.dim != 2) {
    throw UsageError("circular coefficients need 2D Cartesian input");
  }
  check_orders(c.max_order);
  validate_cartesian(c);
  CircularCoeffs out(c.max_order);
  out.real = c.real;
  fill_angular(c.orders, circular_from_cartesian_rows(), false,
               [&](const std::vector<int>& i, Complex v) { out.at(i[0]) = v; }, c.max_order);
  return out;
}

CartesianCoeffsUniaxial spherical_to_cartesian_3d(const SphericalCoeffs& c) {
  check_orders(c.max_order());
  CartesianCoeffsUniaxial out(3, c.max_order());
  out.real = c.real;
  fill_cartesian(out.orders, cartesian_from_spherical_rows(), false,
                 [&](const std::vector<int>& i) { return c.at(i[0], i[1]); }, c.max_order(), "cartesian3d");
  return out;
}

SphericalCoeffs cartesian_to_spherical_3d(const CartesianCoeffsUniaxial& c) {
  if (c.dim != 3) {
    throw UsageError("spherical coefficients need 3D Cartesian input");
  }
  check_orders(c.max_order);
  validate_cartesian(c);
  SphericalCoeffs out(c.max_order);
  out.real = c.real;
  fill_angular(c.orders, spherical_from_cartesian_rows(), false,
               [&](const std::vector<int>& i, Complex v) { out.at(i[0], i[1]) = v; }, c.max_order);
  return out;
}

CartesianCoeffsBiaxial wigner_to_cartesian_biaxial(const WignerCoeffs& c) {
  check_orders(c.max_order());
  CartesianCoeffsBiaxial out(c.max_order());
  out.real = c.real;
  fill_cartesian(out.orders, cartesian_from_wigner_rows(), true,
                 [&](const std::vector<int>& i) { return c.at(i[0], i[1], i[2]); }, c.max_order(),
                 "cartesian_biaxial");
  return out;
}

WignerCoeffs cartesian_biaxial_to_wigner(const CartesianCoeffsBiaxial& c) {
  check_orders(c.max_order);
  validate_cartesian(c);
  WignerCoeffs out(c.max_order);
  out.real = c.real;
  fill_angular(c.orders, wigner_from_cartesian_rows(), true,
               [&](const std::vector<int>& i, Complex v) { out.at(i[0], i[1], i[2]) = v; }, c.max_order);
  return out;
}

}  // namespace orientx
