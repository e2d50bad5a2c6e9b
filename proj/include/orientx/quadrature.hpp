#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "orientx/geometry.hpp"
#include "orientx/tensor.hpp"

namespace orientx {

enum class Manifold { S1, S2, SO3 };

std::string manifold_name(Manifold m);

using Node = std::variant<PolarAngle2D, SphericalAngles, EulerAngles>;

/// Nodes and positive weights; band-limited functions up to exact_degree
/// integrate exactly. Weights sum to 2pi (S1), 4pi (S2) or 8pi^2 (SO3).
struct QuadratureRule {
  Manifold manifold;
  std::vector<Node> nodes;
  std::vector<double> weights;
  int exact_degree;
};

/// n equispaced nodes on the circle.
QuadratureRule rule_s1(int n);
/// Gauss-Legendre in cos(theta) times uniform phi.
QuadratureRule rule_s2(int n_theta, int n_phi);
/// Gauss-Legendre in cos(theta) times uniform phi and chi.
QuadratureRule rule_so3(int n_theta, int n_phi, int n_chi);

/// Rule sizes for fitting up to order L: n_theta = L + 2, n_phi = n_chi = 2L + 3.
QuadratureRule default_rule(Manifold m, int max_order);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

using S1Function = std::function<Complex(const PolarAngle2D&)>;
using S2Function = std::function<Complex(const SphericalAngles&)>;
using SO3Function = std::function<Complex(const EulerAngles&)>;

/// Sum w_i f(x_i). Throws UsageError if the rule lives on another manifold.
Complex integrate(const QuadratureRule& rule, const S1Function& f);
Complex integrate(const QuadratureRule& rule, const S2Function& f);
Complex integrate(const QuadratureRule& rule, const SO3Function& f);

/// Throws UsageError unless rule.manifold == expected.
void require_manifold(const QuadratureRule& rule, Manifold expected);

}  // namespace orientx
