#include "orientx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orientx/errors.hpp"

namespace orientx {

std::string manifold_name(Manifold m) {
  switch (m) {
    case Manifold::S1:
      return "S1";
    case Manifold::S2:
      return "S2";
    case Manifold::SO3:
      return "SO3";
  }
  return "?";
}

namespace {

void check_count(int n, const char* name) {
  if (n < 1) {
    std::ostringstream msg;
    msg << name << " must be >= 1 (got " << n << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  check_count(n, "node count");
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(z), p0 = P_{n-1}(z)
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) {
        break;
      }
    }
    // recompute the derivative at the converged node
    double p0 = 1.0, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = weight;
    w[static_cast<std::size_t>(n - 1 - i)] = weight;
  }
  if (n % 2 == 1) {
    x[static_cast<std::size_t>(n / 2)] = 0.0;
  }
}

QuadratureRule rule_s1(int n) {
  check_count(n, "n");
  QuadratureRule r{Manifold::S1, {}, {}, n - 1};
  for (int k = 0; k < n; ++k) {
    r.nodes.emplace_back(PolarAngle2D(kTwoPi * k / n));
    r.weights.push_back(kTwoPi / n);
  }
  return r;
}

QuadratureRule rule_s2(int n_theta, int n_phi) {
  check_count(n_theta, "n_theta");
  check_count(n_phi, "n_phi");
  std::vector<double> x, w;
  gauss_legendre(n_theta, x, w);
  QuadratureRule r{Manifold::S2, {}, {}, std::min(2 * n_theta - 1, n_phi - 1)};
  for (int a = 0; a < n_theta; ++a) {
    const double theta = std::acos(x[static_cast<std::size_t>(a)]);
    for (int b = 0; b < n_phi; ++b) {
      r.nodes.emplace_back(SphericalAngles(theta, kTwoPi * b / n_phi));
      r.weights.push_back(w[static_cast<std::size_t>(a)] * kTwoPi / n_phi);
    }
  }
  return r;
}

QuadratureRule rule_so3(int n_theta, int n_phi, int n_chi) {
  check_count(n_theta, "n_theta");
  check_count(n_phi, "n_phi");
  check_count(n_chi, "n_chi");
  std::vector<double> x, w;
  gauss_legendre(n_theta, x, w);
  QuadratureRule r{Manifold::SO3, {}, {}, std::min({2 * n_theta - 1, n_phi - 1, n_chi - 1})};
  for (int a = 0; a < n_theta; ++a) {
    const double theta = std::acos(x[static_cast<std::size_t>(a)]);
    for (int b = 0; b < n_phi; ++b) {
      for (int c = 0; c < n_chi; ++c) {
        r.nodes.emplace_back(EulerAngles(theta, kTwoPi * b / n_phi, kTwoPi * c / n_chi));
        r.weights.push_back(w[static_cast<std::size_t>(a)] * (kTwoPi / n_phi) * (kTwoPi / n_chi));
      }
    }
  }
  return r;
}

QuadratureRule default_rule(Manifold m, int max_order) {
  if (max_order < 0) {
    throw DomainError("max order must be non-negative");
  }
  switch (m) {
    case Manifold::S1:
      return rule_s1(2 * max_order + 3);
    case Manifold::S2:
      return rule_s2(max_order + 2, 2 * max_order + 3);
    case Manifold::SO3:
      return rule_so3(max_order + 2, 2 * max_order + 3, 2 * max_order + 3);
  }
  throw UsageError("unknown manifold");
}

void require_manifold(const QuadratureRule& rule, Manifold expected) {
  if (rule.manifold != expected) {
    throw UsageError("quadrature rule lives on " + manifold_name(rule.manifold) + ", expected " +
                     manifold_name(expected));
  }
}

namespace {

template <class NodeT, class F>
Complex sum_over(const QuadratureRule& rule, Manifold expected, const F& f) {
  require_manifold(rule, expected);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    acc += rule.weights[k] * f(std::get<NodeT>(rule.nodes[k]));
  }
  return acc;
}

}  // namespace

Complex integrate(const QuadratureRule& rule, const S1Function& f) {
  return sum_over<PolarAngle2D>(rule, Manifold::S1, f);
}

Complex integrate(const QuadratureRule& rule, const S2Function& f) {
  return sum_over<SphericalAngles>(rule, Manifold::S2, f);
}

Complex integrate(const QuadratureRule& rule, const SO3Function& f) {
  return sum_over<EulerAngles>(rule, Manifold::SO3, f);
}

}  // namespace orientx
