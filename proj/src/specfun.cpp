#include "orientx/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "orientx/errors.hpp"

namespace orientx {

namespace {

constexpr std::array<double, 2 * kMaxOrder + 1> make_factorials() {
  std::array<double, 2 * kMaxOrder + 1> f{};
  unsigned long long acc = 1;
  f[0] = 1.0;
  for (int n = 1; n <= 2 * kMaxOrder; ++n) {
    acc *= static_cast<unsigned long long>(n);
    f[static_cast<std::size_t>(n)] = static_cast<double>(acc);
  }
  return f;
}

constexpr auto kFactorials = make_factorials();

void check_order(int l) {
  if (l < 0 || l > kMaxOrder) {
    std::ostringstream msg;
    msg << "order l = " << l << " outside [0, " << kMaxOrder << "]";
    throw DomainError(msg.str());
  }
}

void check_projection(int l, int m, const char* name) {
  if (m < -l || m > l) {
    std::ostringstream msg;
    msg << "|" << name << "| = " << std::abs(m) << " exceeds l = " << l;
    throw DomainError(msg.str());
  }
}

// x^p with 0^0 = 1
double ipow(double x, int p) {
  double r = 1.0;
  for (int k = 0; k < p; ++k) {
    r *= x;
  }
  return r;
}

// m >= 0
double legendre_nonneg(int l, int m, double x) {
  // d^{l+m}/dx^{l+m} (x^2 - 1)^l, expanded term by term
  double deriv = 0.0;
  for (int k = 0; k <= l; ++k) {
    const int power = 2 * k;
    if (power < l + m) {
      continue;
    }
    const double binom = kFactorials[static_cast<std::size_t>(l)] /
                         (kFactorials[static_cast<std::size_t>(k)] * kFactorials[static_cast<std::size_t>(l - k)]);
    const double sign = ((l - k) % 2 == 0) ? 1.0 : -1.0;
    const double falling = kFactorials[static_cast<std::size_t>(power)] /
                           kFactorials[static_cast<std::size_t>(power - l - m)];
    deriv += sign * binom * falling * ipow(x, power - l - m);
  }
  const double sine_part = m == 0 ? 1.0 : std::pow(std::max(0.0, 1.0 - x * x), 0.5 * m);
  const double cs = (m % 2 == 0) ? 1.0 : -1.0;
  return cs * sine_part * deriv / (std::ldexp(1.0, l) * kFactorials[static_cast<std::size_t>(l)]);
}

}  // namespace

double factorial(int n) {
  if (n < 0 || n > 2 * kMaxOrder) {
    throw DomainError("factorial argument out of table range");
  }
  return kFactorials[static_cast<std::size_t>(n)];
}

double assoc_legendre(int l, int m, double x) {
  check_order(l);
  check_projection(l, m, "m");
  if (!(x >= -1.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "x = " << x << " outside [-1, 1]";
    throw DomainError(msg.str());
  }
  if (m >= 0) {
    return legendre_nonneg(l, m, x);
  }
  const int a = -m;
  const double sign = (a % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial(l - a) / factorial(l + a) * legendre_nonneg(l, a, x);
}

Complex spherical_harmonic(int l, int m, const SphericalAngles& a) {
  check_order(l);
  check_projection(l, m, "m");
  const double norm = std::sqrt((2 * l + 1) / (4.0 * kPi) * factorial(l - m) / factorial(l + m));
  return norm * assoc_legendre(l, m, std::cos(a.theta())) * std::polar(1.0, m * a.phi());
}

double wigner_small_d(int l, int m, int n, double theta) {
  check_order(l);
  check_projection(l, m, "m");
  check_projection(l, n, "n");
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const int kmin = std::max(0, m - n);
  const int kmax = std::min(l + m, l - n);
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double denom = factorial(l + m - k) * factorial(l - n - k) * factorial(k) * factorial(k - m + n);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * ipow(c, 2 * l + m - n - 2 * k) * ipow(s, 2 * k - m + n) / denom;
  }
  return std::sqrt(factorial(l + m) * factorial(l - m) * factorial(l + n) * factorial(l - n)) * sum;
}

Complex wigner_D(int l, int m, int n, const EulerAngles& w) {
  return std::polar(1.0, -m * w.phi()) * wigner_small_d(l, m, n, w.theta()) * std::polar(1.0, -n * w.chi());
}

WignerBlock wigner_block(int l, const EulerAngles& w) {
  check_order(l);
  WignerBlock b(2 * l + 1, 2 * l + 1);
  for (int m = -l; m <= l; ++m) {
    for (int n = -l; n <= l; ++n) {
      b(m + l, n + l) = wigner_D(l, m, n, w);
    }
  }
  return b;
}

RealTensor tensor_poly(int d, int l, const UnitVector& u) {
  if (d != 2 && d != 3) {
    throw DomainError("tensor polynomials need d = 2 or d = 3");
  }
  if (u.dim() != d) {
    throw UsageError("unit vector dimension does not match d");
  }
  if (l < 0 || l > kMaxCartesianOrder) {
    std::ostringstream msg;
    msg << "unsupported order l = " << l << " for tensor polynomials (max " << kMaxCartesianOrder << ")";
    throw DomainError(msg.str());
  }
  RealTensor t(d, l);
  auto delta = [](int i, int j) { return i == j ? 1.0 : 0.0; };
  const bool two_d = d == 2;
  switch (l) {
    case 0:
      t.flat(0) = 1.0;
      break;
    case 1:
      for (int i = 0; i < d; ++i) {
        t.at({i}) = u[static_cast<std::size_t>(i)];
      }
      break;
    case 2:
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          const double uu = u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)];
          t.at({i, j}) = two_d ? 2.0 * uu - delta(i, j) : 0.5 * (3.0 * uu - delta(i, j));
        }
      }
      break;
    case 3:
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          for (int k = 0; k < d; ++k) {
            const double ui = u[static_cast<std::size_t>(i)];
            const double uj = u[static_cast<std::size_t>(j)];
            const double uk = u[static_cast<std::size_t>(k)];
            // 3 (u delta)^sym is the three-term sum
            const double ud = ui * delta(j, k) + uj * delta(k, i) + uk * delta(i, j);
            t.at({i, j, k}) = two_d ? 4.0 * ui * uj * uk - ud : 0.5 * (5.0 * ui * uj * uk - ud);
          }
        }
      }
      break;
    default:
      break;
  }
  return t;
}

}  // namespace orientx
