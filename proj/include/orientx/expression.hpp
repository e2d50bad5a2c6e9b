#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orientx/geometry.hpp"
#include "orientx/tensor.hpp"

namespace orientx {

/// Values available to an expression at one orientation.
struct Variables {
  double theta = 0.0, phi = 0.0, chi = 0.0;
  double u[3] = {0.0, 0.0, 0.0};
  double R[3][3] = {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};

  static Variables at(const PolarAngle2D& a);
  static Variables at(const SphericalAngles& a);
  static Variables at(const EulerAngles& w);
};

/// Which variable names an expression may use.
enum class VariableSet {
  circle,    // phi, u1, u2
  sphere,    // theta, phi, u1..u3
  rotation,  // theta, phi, chi, u1..u3 (third column of R), R11..R33
};

/// Small arithmetic language: numbers, + - * / ^, parentheses, unary minus,
/// cos, sin, sqrt, exp, the constants pi and i, and the variables above.
class Expression {
 public:
  /// Throws ParseError with the offending position.
  static Expression parse(const std::string& text, VariableSet vars);
  Complex evaluate(const Variables& v) const;
  /// True if the expression never touches the constant i.
  bool real() const noexcept { return real_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  bool real_ = true;
};

}  // namespace orientx
