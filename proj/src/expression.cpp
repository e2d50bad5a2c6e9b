#include "orientx/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "orientx/errors.hpp"

namespace orientx {

Variables Variables::at(const PolarAngle2D& a) {
  Variables v;
  v.phi = a.phi();
  const UnitVector u = unit_vector_2d(a);
  v.u[0] = u[0];
  v.u[1] = u[1];
  return v;
}

Variables Variables::at(const SphericalAngles& a) {
  Variables v;
  v.theta = a.theta();
  v.phi = a.phi();
  const UnitVector u = unit_vector_3d(a);
  for (std::size_t i = 0; i < 3; ++i) v.u[i] = u[i];
  return v;
}

Variables Variables::at(const EulerAngles& w) {
  Variables v;
  v.theta = w.theta();
  v.phi = w.phi();
  v.chi = w.chi();
  const RotationMatrix3 r = rotation_matrix_3d(w);
  for (int i = 0; i < 3; ++i) {
    v.u[i] = r(i, 2);
    for (int j = 0; j < 3; ++j) v.R[i][j] = r(i, j);
  }
  return v;
}

struct Expression::Node {
  enum class Kind { constant, variable, neg, add, sub, mul, div, pow, call };
  Kind kind;
  Complex value{};
  int slot = 0;  // variable: 0 theta, 1 phi, 2 chi, 3..5 u, 6..14 R
  std::string fn;
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
 public:
  Parser(const std::string& text, VariableSet vars) : s_(text), vars_(vars) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

  bool uses_i = false;

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression: " + what + " at position " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      if (accept('+')) {
        left = make({Node::Kind::add, {}, 0, {}, left, term()});
      } else if (accept('-')) {
        left = make({Node::Kind::sub, {}, 0, {}, left, term()});
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = unary();
    for (;;) {
      if (accept('*')) {
        left = make({Node::Kind::mul, {}, 0, {}, left, unary()});
      } else if (accept('/')) {
        left = make({Node::Kind::div, {}, 0, {}, left, unary()});
      } else {
        return left;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make({Node::Kind::neg, {}, 0, {}, unary(), nullptr});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make({Node::Kind::pow, {}, 0, {}, base, unary()});
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    double v = 0.0;
    const char* first = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return make({Node::Kind::constant, Complex(v, 0.0), 0, {}, nullptr, nullptr});
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name == "cos" || name == "sin" || name == "sqrt" || name == "exp") {
      if (!accept('(')) fail("expected '(' after " + name);
      NodePtr arg = expr();
      if (!accept(')')) fail("expected ')'");
      return make({Node::Kind::call, {}, 0, name, arg, nullptr});
    }
    if (name == "pi") return make({Node::Kind::constant, Complex(kPi, 0.0), 0, {}, nullptr, nullptr});
    if (name == "i") {
      uses_i = true;
      return make({Node::Kind::constant, Complex(0.0, 1.0), 0, {}, nullptr, nullptr});
    }
    const int slot = variable_slot(name);
    if (slot < 0) {
      pos_ = start;
      fail("unknown or unavailable name '" + name + "'");
    }
    return make({Node::Kind::variable, {}, slot, {}, nullptr, nullptr});
  }

  int variable_slot(const std::string& name) const {
    const bool sphere = vars_ != VariableSet::circle;
    const bool rotation = vars_ == VariableSet::rotation;
    if (name == "phi") return 1;
    if (name == "theta" && sphere) return 0;
    if (name == "chi" && rotation) return 2;
    if (name.size() == 2 && name[0] == 'u') {
      const int k = name[1] - '1';
      if (k >= 0 && k < (sphere ? 3 : 2)) return 3 + k;
    }
    if (rotation && name.size() == 3 && name[0] == 'R') {
      const int i = name[1] - '1', j = name[2] - '1';
      if (i >= 0 && i < 3 && j >= 0 && j < 3) return 6 + 3 * i + j;
    }
    return -1;
  }

  const std::string& s_;
  VariableSet vars_;
  std::size_t pos_ = 0;
};

Complex int_power(Complex base, long n) {
  Complex r = 1.0;
  const bool invert = n < 0;
  unsigned long e = static_cast<unsigned long>(invert ? -n : n);
  while (e) {
    if (e & 1UL) r *= base;
    base *= base;
    e >>= 1UL;
  }
  return invert ? 1.0 / r : r;
}

Complex eval(const Node& n, const Variables& v) {
  switch (n.kind) {
    case Node::Kind::constant:
      return n.value;
    case Node::Kind::variable:
      if (n.slot == 0) return v.theta;
      if (n.slot == 1) return v.phi;
      if (n.slot == 2) return v.chi;
      if (n.slot < 6) return v.u[n.slot - 3];
      return v.R[(n.slot - 6) / 3][(n.slot - 6) % 3];
    case Node::Kind::neg:
      return -eval(*n.a, v);
    case Node::Kind::add:
      return eval(*n.a, v) + eval(*n.b, v);
    case Node::Kind::sub:
      return eval(*n.a, v) - eval(*n.b, v);
    case Node::Kind::mul:
      return eval(*n.a, v) * eval(*n.b, v);
    case Node::Kind::div:
      return eval(*n.a, v) / eval(*n.b, v);
    case Node::Kind::pow: {
      const Complex base = eval(*n.a, v);
      const Complex e = eval(*n.b, v);
      if (e.imag() == 0.0 && std::trunc(e.real()) == e.real() && std::abs(e.real()) <= 64.0) {
        return int_power(base, static_cast<long>(e.real()));
      }
      return std::pow(base, e);
    }
    case Node::Kind::call: {
      const Complex x = eval(*n.a, v);
      if (n.fn == "cos") return std::cos(x);
      if (n.fn == "sin") return std::sin(x);
      if (n.fn == "exp") return std::exp(x);
      return std::sqrt(x);
    }
  }
  return 0.0;
}

}  // namespace

Expression Expression::parse(const std::string& text, VariableSet vars) {
  Parser p(text, vars);
  Expression e;
  e.root_ = p.parse();
  e.real_ = !p.uses_i;
  return e;
}

Complex Expression::evaluate(const Variables& v) const { return eval(*root_, v); }

}  // namespace orientx
