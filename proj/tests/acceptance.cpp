// Acceptance suite: prints one PASS/FAIL line per criterion, exits non-zero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/Dense>

#include "orientx/convert.hpp"
#include "orientx/expansion.hpp"
#include "orientx/io.hpp"
#include "orientx/orderparams.hpp"
#include "orientx/specfun.hpp"
#include "test_support.hpp"

using namespace orientx;
using orientx::testkit::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the worst error seen against a tolerance.
struct Worst {
  explicit Worst(double t) : tol(t) {}
  double tol;
  double err = 0.0;
  std::string where;
  void see(double e, const std::string& at) {
    if (!(e <= err)) {
      err = e;
      where = at;
    }
  }
  bool ok() const { return err <= tol; }
  std::string str() const {
    std::ostringstream s;
    s << "max err " << err << " (tol " << tol << ")";
    if (!ok()) s << " at " << where;
    return s.str();
  }
};

// ---- 1: closed-form D^l_mn table ----

struct ClosedForm {
  int l, m, n;
  Complex (*f)(double, double, double);
};

const Complex kI(0.0, 1.0);
const ClosedForm kClosedForms[] = {
#include "wigner_closed_form.inc"
};

Outcome closed_form_oracle() {
  Rng g(1001);
  std::vector<EulerAngles> ws;
  for (int k = 0; k < 200; ++k) {
    ws.emplace_back(testkit::uniform(g, 0, kPi), testkit::uniform(g, 0, kTwoPi), testkit::uniform(g, 0, kTwoPi));
  }
  Worst w(1e-12);
  int count = 0;
  for (const auto& c : kClosedForms) {
    ++count;
    for (const auto& e : ws) {
      const Complex want = c.f(e.theta(), e.phi(), e.chi());
      std::ostringstream at;
      at << "D^" << c.l << "_{" << c.m << "," << c.n << "}(" << e.theta() << "," << e.phi() << "," << e.chi() << ")";
      w.see(std::abs(wigner_D(c.l, c.m, c.n, e) - want), at.str());
    }
  }
  Outcome o{w.ok() && count == 84, std::to_string(count) + " entries x 200 triples, " + w.str()};
  return o;
}

// ---- 2: orthogonality ----

Outcome orthogonality() {
  const int L = 4;
  Worst w(1e-9);
  {
    const QuadratureRule r = default_rule(Manifold::S2, L);
    const int nf = (L + 1) * (L + 1);
    Eigen::MatrixXcd b(static_cast<Eigen::Index>(r.nodes.size()), nf);
    for (std::size_t k = 0; k < r.nodes.size(); ++k) {
      const auto& a = std::get<SphericalAngles>(r.nodes[k]);
      int col = 0;
      for (int l = 0; l <= L; ++l) {
        for (int m = -l; m <= l; ++m) b(static_cast<Eigen::Index>(k), col++) = std::sqrt(r.weights[k]) * spherical_harmonic(l, m, a);
      }
    }
    const Eigen::MatrixXcd gram = b.adjoint() * b;
    w.see((gram - Eigen::MatrixXcd::Identity(nf, nf)).cwiseAbs().maxCoeff(), "spherical harmonics");
  }
  {
    const QuadratureRule r = default_rule(Manifold::SO3, L);
    std::vector<int> ls;
    for (int l = 0; l <= L; ++l) {
      for (int k = 0; k < (2 * l + 1) * (2 * l + 1); ++k) ls.push_back(l);
    }
    const auto nf = static_cast<Eigen::Index>(ls.size());
    Eigen::MatrixXcd b(static_cast<Eigen::Index>(r.nodes.size()), nf);
    for (std::size_t k = 0; k < r.nodes.size(); ++k) {
      const auto& e = std::get<EulerAngles>(r.nodes[k]);
      Eigen::Index col = 0;
      for (int l = 0; l <= L; ++l) {
        const WignerBlock d = wigner_block(l, e);
        for (int m = 0; m < 2 * l + 1; ++m) {
          for (int n = 0; n < 2 * l + 1; ++n) b(static_cast<Eigen::Index>(k), col++) = std::sqrt(r.weights[k]) * d(m, n);
        }
      }
    }
    Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(nf, nf);
    for (Eigen::Index k = 0; k < nf; ++k) want(k, k) = 8 * kPi * kPi / (2 * ls[static_cast<std::size_t>(k)] + 1);
    w.see(((b.adjoint() * b) - want).cwiseAbs().maxCoeff(), "Wigner functions");
  }
  return {w.ok(), "l, l' <= 4, " + w.str()};
}

// ---- 3: round trips ----

Outcome round_trips() {
  Rng g(1003);
  Worst w(1e-11);
  for (int n = 0; n < 200; ++n) {
    const int L = n % 4;
    const auto a = testkit::random_circular(g, L);
    w.see(testkit::max_diff(cartesian_to_circular_2d(circular_to_cartesian_2d(a)), a), "circular");
    const auto b = testkit::random_cartesian_uniaxial(g, 2, L);
    w.see(testkit::max_diff(circular_to_cartesian_2d(cartesian_to_circular_2d(b)), b), "cartesian2d");
    const auto c = testkit::random_spherical_coeffs(g, L);
    w.see(testkit::max_diff(cartesian_to_spherical_3d(spherical_to_cartesian_3d(c)), c), "spherical");
    const auto d = testkit::random_cartesian_uniaxial(g, 3, L);
    w.see(testkit::max_diff(spherical_to_cartesian_3d(cartesian_to_spherical_3d(d)), d), "cartesian3d");
    const auto e = testkit::random_wigner(g, L);
    w.see(testkit::max_diff(cartesian_biaxial_to_wigner(wigner_to_cartesian_biaxial(e)), e), "wigner");
    const auto f = testkit::random_cartesian_biaxial(g, L);
    w.see(testkit::max_diff(wigner_to_cartesian_biaxial(cartesian_biaxial_to_wigner(f)), f), "cartesian_biaxial");
  }
  return {w.ok(), "200 sets x 3 pairs x 2 directions, " + w.str()};
}

// ---- 4: conversion vs quadrature ----

// Random complex polynomial of total degree <= 3 in the given variables.
struct RandomPoly {
  std::vector<std::vector<int>> monomials;
  std::vector<Complex> coeffs;

  // -1 marks an absent factor; a <= b <= c lists each monomial once.
  RandomPoly(Rng& g, int nvars) {
    for (int a = -1; a < nvars; ++a) {
      for (int b = a; b < nvars; ++b) {
        for (int c = b; c < nvars; ++c) {
          std::vector<int> mono;
          for (int v : {a, b, c}) {
            if (v >= 0) mono.push_back(v);
          }
          monomials.push_back(mono);
          coeffs.push_back(testkit::random_complex(g));
        }
      }
    }
  }

  Complex operator()(const double* x) const {
    Complex s = 0.0;
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      double p = 1.0;
      for (int v : monomials[k]) p *= x[v];
      s += coeffs[k] * p;
    }
    return s;
  }
};

Outcome conversion_vs_quadrature() {
  Rng g(1004);
  Worst w(1e-9);
  const QuadratureRule s1 = default_rule(Manifold::S1, 3);
  const QuadratureRule s2 = default_rule(Manifold::S2, 3);
  const QuadratureRule so3 = default_rule(Manifold::SO3, 3);
  for (int n = 0; n < 50; ++n) {
    const RandomPoly p2(g, 2), p3(g, 3), p9(g, 9);
    const UnitVectorFunction f2 = [&](const UnitVector& u) {
      const double x[2] = {u[0], u[1]};
      return p2(x);
    };
    const UnitVectorFunction f3 = [&](const UnitVector& u) {
      const double x[3] = {u[0], u[1], u[2]};
      return p3(x);
    };
    const SO3Function f9 = [&](const EulerAngles& e) {
      const Eigen::Matrix3d r = rotation_matrix_3d(e).matrix();
      double x[9];
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) x[3 * i + j] = r(i, j);
      }
      return p9(x);
    };
    const auto circ = fit_circular([&](const PolarAngle2D& a) { return f2(unit_vector_2d(a)); }, 3, s1);
    const auto cart2 = fit_cartesian_uniaxial(f2, 2, 3, s1);
    w.see(testkit::max_diff(cartesian_to_circular_2d(cart2), circ), "circular");
    w.see(testkit::max_diff(circular_to_cartesian_2d(circ), cart2), "cartesian2d");
    const auto sph = fit_spherical([&](const SphericalAngles& a) { return f3(unit_vector_3d(a)); }, 3, s2);
    const auto cart3 = fit_cartesian_uniaxial(f3, 3, 3, s2);
    w.see(testkit::max_diff(cartesian_to_spherical_3d(cart3), sph), "spherical");
    w.see(testkit::max_diff(spherical_to_cartesian_3d(sph), cart3), "cartesian3d");
    const auto wig = fit_wigner(f9, 3, so3);
    const auto cartb = fit_cartesian_biaxial(f9, 3, so3);
    w.see(testkit::max_diff(cartesian_biaxial_to_wigner(cartb), wig), "wigner");
    w.see(testkit::max_diff(wigner_to_cartesian_biaxial(wig), cartb), "cartesian_biaxial");
  }
  return {w.ok(), "50 functions x 6 directions, " + w.str()};
}

// ---- 5: rotation commuting diagram ----

Outcome commuting_diagram() {
  Rng g(1005);
  Worst w(1e-10);
  for (int n = 0; n < 100; ++n) {
    const int L = n % 4;
    const auto c = testkit::random_spherical_coeffs(g, L);
    const EulerAngles e = testkit::random_euler(g);
    w.see(testkit::max_diff(spherical_to_cartesian_3d(rotate_spherical(c, e)),
                            rotate_cartesian_uniaxial(spherical_to_cartesian_3d(c), rotation_matrix_3d(e))),
          "3D");
    const auto a = testkit::random_circular(g, L);
    const double phi = testkit::uniform(g, 0, kTwoPi);
    w.see(testkit::max_diff(circular_to_cartesian_2d(rotate_circular(a, phi)),
                            rotate_cartesian_uniaxial(circular_to_cartesian_2d(a), rotation_matrix_2d(phi))),
          "2D");
  }
  return {w.ok(), "100 cases each in 2D and 3D, " + w.str()};
}

// ---- 6: structural invariants and independence counts ----

int numerical_rank(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > 1e-9 * s(0)) ++r;
  }
  return r;
}

Eigen::VectorXcd flatten(const ComplexTensor& t) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(t.size()));
  for (std::size_t k = 0; k < t.size(); ++k) v(static_cast<Eigen::Index>(k)) = t.flat(k);
  return v;
}

Outcome structure() {
  Rng g(1006);
  Worst w(1e-12);
  auto check_uni = [&](const CartesianCoeffsUniaxial& c, const std::string& what) {
    for (const auto& t : c.orders) {
      w.see(symmetry_defect(t), what + " symmetry");
      w.see(trace_defect(t), what + " trace");
    }
  };
  auto check_bi = [&](const CartesianCoeffsBiaxial& c, const std::string& what) {
    for (const auto& t : c.orders) {
      w.see(pair_symmetry_defect(t), what + " pair symmetry");
      w.see(pair_trace_defect(t), what + " pair trace");
    }
  };
  for (int n = 0; n < 50; ++n) {
    check_uni(circular_to_cartesian_2d(testkit::random_circular(g, 3)), "circular->cartesian2d");
    check_uni(spherical_to_cartesian_3d(testkit::random_spherical_coeffs(g, 3)), "spherical->cartesian3d");
    check_bi(wigner_to_cartesian_biaxial(testkit::random_wigner(g, 3)), "wigner->cartesian_biaxial");
    const EulerAngles e = testkit::random_euler(g);
    check_uni(rotate_cartesian_uniaxial(testkit::random_cartesian_uniaxial(g, 3, 3), rotation_matrix_3d(e)),
              "rotated cartesian3d");
    check_bi(rotate_cartesian_biaxial(testkit::random_cartesian_biaxial(g, 3), rotation_matrix_3d(e)),
             "rotated cartesian_biaxial");
  }
  const auto f3 = [](const UnitVector& u) { return Complex(u[0] * u[1] * u[2] + u[2] * u[2], u[0]); };
  check_uni(fit_cartesian_uniaxial(f3, 3, 3, default_rule(Manifold::S2, 3)), "fit cartesian3d");
  check_uni(fit_cartesian_uniaxial(f3, 2, 3, default_rule(Manifold::S1, 3)), "fit cartesian2d");
  check_bi(fit_cartesian_biaxial(
               [](const EulerAngles& e) {
                 const auto r = rotation_matrix_3d(e);
                 return Complex(r(0, 1) * r(1, 2) * r(2, 0), r(2, 2) * r(2, 2));
               },
               3, default_rule(Manifold::SO3, 3)),
           "fit cartesian_biaxial");

  // Independence counts: rank of sampled basis tensors and of the conversion maps.
  std::ostringstream counts;
  bool counts_ok = true;
  for (int l = 0; l <= 3; ++l) {
    const int want2 = l == 0 ? 1 : 2, want3 = 2 * l + 1, wantb = (2 * l + 1) * (2 * l + 1);
    const auto rows = [](int base, int rank) { return static_cast<Eigen::Index>(std::pow(base, rank)); };
    Eigen::MatrixXcd s2(rows(2, l), 60), s3(rows(3, l), 60), sb(rows(9, l), 120);
    for (int k = 0; k < 60; ++k) {
      s2.col(k) = flatten(to_complex(tensor_poly(2, l, unit_vector_2d(testkit::random_polar(g)))));
      s3.col(k) = flatten(to_complex(tensor_poly(3, l, unit_vector_3d(testkit::random_spherical(g)))));
    }
    for (int k = 0; k < 120; ++k) sb.col(k) = flatten(to_complex(biaxial_kernel(l, rotation_matrix_3d(testkit::random_euler(g)))));
    Eigen::MatrixXcd m2(s2.rows(), 2 * l + 1), m3(s3.rows(), 2 * l + 1), mb(sb.rows(), wantb);
    for (int k = -l; k <= l; ++k) {
      CircularCoeffs a(l);
      a.at(k) = 1.0;
      m2.col(k + l) = flatten(circular_to_cartesian_2d(a).orders[static_cast<std::size_t>(l)]);
      SphericalCoeffs b(l);
      b.at(l, k) = 1.0;
      m3.col(k + l) = flatten(spherical_to_cartesian_3d(b).orders[static_cast<std::size_t>(l)]);
      for (int j = -l; j <= l; ++j) {
        WignerCoeffs c(l);
        c.at(l, k, j) = 1.0;
        mb.col((k + l) * (2 * l + 1) + j + l) = flatten(wigner_to_cartesian_biaxial(c).orders[static_cast<std::size_t>(l)]);
      }
    }
    const int r[6] = {numerical_rank(s2), numerical_rank(m2), numerical_rank(s3),
                      numerical_rank(m3), numerical_rank(sb), numerical_rank(mb)};
    counts << " l=" << l << ":" << r[0] << "/" << r[2] << "/" << r[4];
    counts_ok = counts_ok && r[0] == want2 && r[1] == want2 && r[2] == want3 && r[3] == want3 && r[4] == wantb &&
                r[5] == wantb;
  }
  return {w.ok() && counts_ok, w.str() + ", ranks 2D/3D/biaxial" + counts.str()};
}

// ---- 7: order parameters ----

Outcome order_parameters() {
  Rng g(1007);
  Worst w(1e-12);
  Worst ht(1e-14);
  bool p_zero = true;
  for (int trial = 0; trial < 10; ++trial) {
    for (int kind = 0; kind < 3; ++kind) {
      const int d = kind == 0 ? 2 : 3;
      const bool bi = kind == 2;
      ParticleSnapshot s(d, bi);
      // Oracle: order-l coefficient of the delta sum with the expansion prefactor.
      std::vector<RealTensor> sums;
      for (int l = 0; l <= 2; ++l) sums.emplace_back(d, bi ? 2 * l : l);
      for (int n = 0; n < 100; ++n) {
        const Eigen::VectorXd x = Eigen::VectorXd::Random(d);
        if (bi) {
          const RotationMatrix3 r = rotation_matrix_3d(testkit::random_euler(g));
          s.add(x, r);
          for (int l = 0; l <= 2; ++l) sums[l] += biaxial_kernel(l, r);
        } else {
          const UnitVector u = d == 2 ? unit_vector_2d(testkit::random_polar(g))
                                      : unit_vector_3d(testkit::random_spherical(g));
          s.add(x, u);
          for (int l = 0; l <= 2; ++l) sums[l] += tensor_poly(d, l, u);
        }
      }
      // biaxial_kernel already carries its (2l+1)/8pi^2 prefactor
      for (int l = 0; l <= 2 && !bi; ++l) sums[l] *= d == 2 ? (l == 0 ? 1.0 : 2.0) / kTwoPi : (2 * l + 1) / (4 * kPi);
      const auto got = summary(s, false);
      const std::string what = bi ? "biaxial" : d == 2 ? "2D" : "3D";
      w.see(std::abs(got.rho_total - sums[0].flat(0)), what + " rho");
      for (std::size_t k = 0; k < got.P.size(); ++k) w.see(std::abs(got.P.flat(k) - sums[1].flat(k)), what + " P");
      for (std::size_t k = 0; k < got.Q.size(); ++k) w.see(std::abs(got.Q.flat(k) - sums[2].flat(k)), what + " Q");
      if (!bi) {
        const auto sym = summary(s, true);
        for (double v : sym.P.data()) p_zero = p_zero && v == 0.0;
        for (std::size_t k = 0; k < got.Q.size(); ++k) ht.see(std::abs(sym.Q.flat(k) - got.Q.flat(k)), what + " Q");
        ht.see(std::abs(sym.rho_total - got.rho_total), what + " rho");
      }
    }
  }
  return {w.ok() && ht.ok() && p_zero, "sums " + w.str() + "; head-tail P exactly zero: " +
                                           (p_zero ? "yes" : "no") + ", Q " + ht.str()};
}

// ---- 8: CLI pipeline ----

#ifndef ORIENTX_CLI_PATH
#define ORIENTX_CLI_PATH "orientx"
#endif

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + ORIENTX_CLI_PATH + "\" " + args;
  return std::system(cmd.c_str());
}

std::vector<Complex> read_values(const std::string& path, std::size_t arity) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<Complex> out;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    if (v.size() == arity + 2) out.emplace_back(v[arity], v[arity + 1]);
  }
  return out;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Outcome cli_pipeline() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("orientx_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto p = [&](const std::string& name) { return "\"" + (dir / name).string() + "\""; };
  Rng g(1008);
  Worst w(1e-9);
  bool ok = true;
  std::string failed;
  auto step = [&](const std::string& args) {
    if (!ok) return;
    if (run(args) != 0) {
      ok = false;
      failed = args;
    }
  };

  // 2D: circular -> cartesian2d -> rotate -> circular
  {
    const double a = 0.7;
    const auto f = [](double phi) { return std::pow(std::cos(phi), 3) - 0.5 * std::sin(2 * phi) + 0.25; };
    step("fit --input \"cos(phi)^3 - 0.5*sin(2*phi) + 0.25\" --family circular --max-order 3 --output " + p("a.json"));
    step("convert --input " + p("a.json") + " --to cartesian2d --output " + p("b.json"));
    step("rotate --input " + p("b.json") + " --angle=" + fmt(a) + " --output " + p("c.json"));
    step("convert --input " + p("c.json") + " --to circular --output " + p("d.json"));
    std::ofstream pts(dir / "p2.txt");
    std::vector<double> phis;
    for (int n = 0; n < 100; ++n) {
      phis.push_back(testkit::uniform(g, 0, kTwoPi));
      pts << fmt(phis.back()) << '\n';
    }
    pts.close();
    step("evaluate --input " + p("d.json") + " --at @" + (dir / "p2.txt").string() + " --output " + p("v2.csv"));
    if (ok) {
      const auto v = read_values((dir / "v2.csv").string(), 1);
      if (v.size() != phis.size()) ok = false, failed = "2D value count";
      for (std::size_t n = 0; ok && n < v.size(); ++n) w.see(std::abs(v[n] - f(phis[n] + a)), "2D");
    }
  }
  // 3D: cartesian3d -> spherical -> rotate -> cartesian3d
  {
    const EulerAngles e(1.1, 0.4, 2.5);
    const Eigen::Matrix3d r = rotation_matrix_3d(e).matrix();
    const auto f = [](const Eigen::Vector3d& u) { return u(0) * u(1) * u(2) + 0.5 * u(2) * u(2) - 0.3 * u(0) + 0.1; };
    step("fit --input \"u1*u2*u3 + 0.5*u3^2 - 0.3*u1 + 0.1\" --family cartesian3d --max-order 3 --output " +
         p("e.json"));
    step("convert --input " + p("e.json") + " --to spherical --output " + p("f.json"));
    step("rotate --input " + p("f.json") + " --euler " + fmt(e.theta()) + "," + fmt(e.phi()) + "," + fmt(e.chi()) +
         " --output " + p("g.json"));
    step("convert --input " + p("g.json") + " --to cartesian3d --output " + p("h.json"));
    std::ofstream pts(dir / "p3.txt");
    std::vector<SphericalAngles> as;
    for (int n = 0; n < 100; ++n) {
      as.push_back(testkit::random_spherical(g));
      pts << fmt(as.back().theta()) << ',' << fmt(as.back().phi()) << '\n';
    }
    pts.close();
    step("evaluate --input " + p("h.json") + " --at @" + (dir / "p3.txt").string() + " --output " + p("v3.csv"));
    if (ok) {
      const auto v = read_values((dir / "v3.csv").string(), 2);
      if (v.size() != as.size()) ok = false, failed = "3D value count";
      for (std::size_t n = 0; ok && n < v.size(); ++n) {
        w.see(std::abs(v[n] - f(r * unit_vector_3d(as[n]).vector())), "3D");
      }
    }
  }
  // biaxial: wigner -> cartesian_biaxial -> rotate -> wigner
  {
    const EulerAngles e(0.8, 5.1, 1.7);
    const RotationMatrix3 r0 = rotation_matrix_3d(e);
    const auto f = [](const Eigen::Matrix3d& m) {
      return m(0, 0) * m(1, 2) + m(2, 2) * m(2, 2) * m(0, 1) - 0.4 * m(2, 0) + 0.2;
    };
    step("fit --input \"R11*R23 + R33^2*R12 - 0.4*R31 + 0.2\" --family wigner --max-order 3 --output " +
         p("i.json"));
    step("convert --input " + p("i.json") + " --to cartesian_biaxial --output " + p("j.json"));
    step("rotate --input " + p("j.json") + " --euler " + fmt(e.theta()) + "," + fmt(e.phi()) + "," + fmt(e.chi()) +
         " --output " + p("k.json"));
    step("convert --input " + p("k.json") + " --to wigner --output " + p("l.json"));
    std::ofstream pts(dir / "pb.txt");
    std::vector<EulerAngles> es;
    for (int n = 0; n < 100; ++n) {
      es.push_back(testkit::random_euler(g));
      pts << fmt(es.back().theta()) << ',' << fmt(es.back().phi()) << ',' << fmt(es.back().chi()) << '\n';
    }
    pts.close();
    step("evaluate --input " + p("l.json") + " --at @" + (dir / "pb.txt").string() + " --output " + p("vb.csv"));
    if (ok) {
      const auto v = read_values((dir / "vb.csv").string(), 3);
      if (v.size() != es.size()) ok = false, failed = "biaxial value count";
      for (std::size_t n = 0; ok && n < v.size(); ++n) {
        w.see(std::abs(v[n] - f((r0 * rotation_matrix_3d(es[n])).matrix())), "biaxial");
      }
    }
  }
  fs::remove_all(dir);
  if (!ok) return {false, "command failed: " + failed};
  return {w.ok(), "2D, 3D and biaxial pipelines at 100 orientations, " + w.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "closed-form Wigner D oracle", 1.0, closed_form_oracle},
      {2, "orthogonality", 5.0, orthogonality},
      {3, "conversion round trips", 5.0, round_trips},
      {4, "conversion vs quadrature", 60.0, conversion_vs_quadrature},
      {5, "rotation commuting diagram", 0.0, commuting_diagram},
      {6, "structural invariants", 0.0, structure},
      {7, "order-parameter consistency", 0.0, order_parameters},
      {8, "end-to-end CLI", 10.0, cli_pipeline},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    char t[32];
    std::snprintf(t, sizeof t, "%.3f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << t << "]" << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
