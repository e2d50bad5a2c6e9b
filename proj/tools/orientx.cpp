// orientx: fit, convert, rotate and evaluate orientational expansions and
// compute order parameters from particle snapshots.
//
// Exit codes: 0 ok, 2 parse/schema/usage, 3 domain, 4 invariant violation.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orientx/convert.hpp"
#include "orientx/errors.hpp"
#include "orientx/expansion.hpp"
#include "orientx/expression.hpp"
#include "orientx/io.hpp"
#include "orientx/orderparams.hpp"
#include "orientx/quadrature.hpp"

using namespace orientx;

namespace {

constexpr const char* kGenerator = "orientx-cli 0.1.0";

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw ParseError(what + ": '" + cell + "' is not a number");
    }
  }
  return out;
}

std::vector<int> parse_counts(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (double v : parse_list(text, what)) {
    if (v != std::floor(v)) throw ParseError(what + ": counts must be integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Manifold manifold_of(Family f) {
  switch (f) {
    case Family::circular:
    case Family::cartesian2d:
      return Manifold::S1;
    case Family::spherical:
    case Family::cartesian3d:
      return Manifold::S2;
    default:
      return Manifold::SO3;
  }
}

VariableSet variables_of(Family f) {
  switch (manifold_of(f)) {
    case Manifold::S1:
      return VariableSet::circle;
    case Manifold::S2:
      return VariableSet::sphere;
    default:
      return VariableSet::rotation;
  }
}

QuadratureRule rule_from(const std::string& spec, Manifold m, int max_order) {
  if (spec.empty() || spec == "auto") return default_rule(m, max_order);
  const auto n = parse_counts(spec, "--rule");
  const std::size_t need = m == Manifold::S1 ? 1 : (m == Manifold::S2 ? 2 : 3);
  if (n.size() != need) {
    throw ParseError("--rule needs " + std::to_string(need) + " count(s) for " + manifold_name(m));
  }
  switch (m) {
    case Manifold::S1:
      return rule_s1(n[0]);
    case Manifold::S2:
      return rule_s2(n[0], n[1]);
    default:
      return rule_so3(n[0], n[1], n[2]);
  }
}

// Empirical measure sum_n delta(x - x_n) as a rule with unit weights.
QuadratureRule rule_from_snapshot(const ParticleSnapshot& s, Manifold m, bool head_tail) {
  const Manifold have = s.biaxial() ? Manifold::SO3 : (s.dim() == 2 ? Manifold::S1 : Manifold::S2);
  if (have != m) {
    throw UsageError("snapshot orientations live on " + manifold_name(have) + " but the family needs " +
                     manifold_name(m));
  }
  QuadratureRule r{m, {}, {}, 0};
  const double w = head_tail && !s.biaxial() ? 0.5 : 1.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (s.biaxial()) {
      r.nodes.emplace_back(euler_angles_from_matrix(s.rotation(n)));
      r.weights.push_back(1.0);
      continue;
    }
    std::vector<UnitVector> dirs{s.direction(n)};
    if (head_tail) dirs.push_back(s.direction(n).negated());
    for (const auto& u : dirs) {
      if (m == Manifold::S1) {
        r.nodes.emplace_back(PolarAngle2D(std::atan2(u[1], u[0])));
      } else {
        r.nodes.emplace_back(spherical_angles_of(u));
      }
      r.weights.push_back(w);
    }
  }
  return r;
}

AnyCoeffs fit_family(Family family, const std::function<Complex(const Variables&)>& f, int L,
                     const QuadratureRule& rule) {
  switch (family) {
    case Family::circular:
      return fit_circular([&](const PolarAngle2D& a) { return f(Variables::at(a)); }, L, rule);
    case Family::spherical:
      return fit_spherical([&](const SphericalAngles& a) { return f(Variables::at(a)); }, L, rule);
    case Family::wigner:
      return fit_wigner([&](const EulerAngles& w) { return f(Variables::at(w)); }, L, rule);
    case Family::cartesian2d:
      return fit_cartesian_uniaxial(
          [&](const UnitVector& u) { return f(Variables::at(PolarAngle2D(std::atan2(u[1], u[0])))); }, 2, L, rule);
    case Family::cartesian3d:
      return fit_cartesian_uniaxial([&](const UnitVector& u) { return f(Variables::at(spherical_angles_of(u))); },
                                    3, L, rule);
    case Family::cartesian_biaxial:
      return fit_cartesian_biaxial([&](const EulerAngles& w) { return f(Variables::at(w)); }, L, rule);
  }
  throw UsageError("unknown family");
}

void set_real(AnyCoeffs& c, bool real) {
  std::visit([&](auto& v) { v.real = real; }, c);
}

AnyCoeffs convert_to(const AnyCoeffs& in, Family to) {
  const Family from = family_of(in);
  auto unsupported = [&]() -> AnyCoeffs {
    throw DomainError("no conversion from " + family_name(from) + " to " + family_name(to));
  };
  if (from == to) return in;
  switch (from) {
    case Family::circular:
      if (to != Family::cartesian2d) return unsupported();
      return circular_to_cartesian_2d(std::get<CircularCoeffs>(in));
    case Family::cartesian2d:
      if (to != Family::circular) return unsupported();
      return cartesian_to_circular_2d(std::get<CartesianCoeffsUniaxial>(in));
    case Family::spherical:
      if (to != Family::cartesian3d) return unsupported();
      return spherical_to_cartesian_3d(std::get<SphericalCoeffs>(in));
    case Family::cartesian3d:
      if (to != Family::spherical) return unsupported();
      return cartesian_to_spherical_3d(std::get<CartesianCoeffsUniaxial>(in));
    case Family::wigner:
      if (to != Family::cartesian_biaxial) return unsupported();
      return wigner_to_cartesian_biaxial(std::get<WignerCoeffs>(in));
    case Family::cartesian_biaxial:
      if (to != Family::wigner) return unsupported();
      return cartesian_biaxial_to_wigner(std::get<CartesianCoeffsBiaxial>(in));
  }
  return unsupported();
}

AnyCoeffs rotate(const AnyCoeffs& in, const std::vector<double>& euler, const std::vector<double>& angle) {
  const Family f = family_of(in);
  const bool planar = f == Family::circular || f == Family::cartesian2d;
  if (planar) {
    if (angle.size() != 1 || !euler.empty()) throw UsageError(family_name(f) + " rotations take --angle phi");
    if (f == Family::circular) return rotate_circular(std::get<CircularCoeffs>(in), angle[0]);
    return rotate_cartesian_uniaxial(std::get<CartesianCoeffsUniaxial>(in), rotation_matrix_2d(angle[0]));
  }
  if (euler.size() != 3 || !angle.empty()) throw UsageError(family_name(f) + " rotations take --euler theta,phi,chi");
  const EulerAngles w(euler[0], euler[1], euler[2]);
  switch (f) {
    case Family::spherical:
      return rotate_spherical(std::get<SphericalCoeffs>(in), w);
    case Family::cartesian3d:
      return rotate_cartesian_uniaxial(std::get<CartesianCoeffsUniaxial>(in), rotation_matrix_3d(w));
    case Family::wigner:
      return rotate_wigner(std::get<WignerCoeffs>(in), w);
    default:
      return rotate_cartesian_biaxial(std::get<CartesianCoeffsBiaxial>(in), rotation_matrix_3d(w));
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Orientation tuples, one per ';' or line; "@path" reads them from a file.
std::vector<std::vector<double>> parse_points(const std::string& spec, std::size_t arity) {
  std::string text = spec;
  if (!text.empty() && text[0] == '@') text = read_text(text.substr(1));
  for (auto& c : text) {
    if (c == '\n' || c == '\r') c = ';';
  }
  std::vector<std::vector<double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    if (item.find_first_not_of(" \t") == item.find('#')) continue;
    auto v = parse_list(item, "--at");
    if (v.size() != arity) {
      throw ParseError("--at: each orientation needs " + std::to_string(arity) + " value(s), got '" + item + "'");
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<double>> grid_points(const std::string& spec, std::size_t arity) {
  const auto n = parse_counts(spec, "--grid");
  if (n.size() != arity) throw ParseError("--grid needs " + std::to_string(arity) + " count(s)");
  for (int k : n) {
    if (k < 1) throw DomainError("--grid counts must be >= 1");
  }
  std::vector<std::vector<double>> out;
  if (arity == 1) {
    for (int a = 0; a < n[0]; ++a) out.push_back({kTwoPi * a / n[0]});
    return out;
  }
  for (int a = 0; a < n[0]; ++a) {
    const double theta = kPi * (a + 0.5) / n[0];
    for (int b = 0; b < n[1]; ++b) {
      const double phi = kTwoPi * b / n[1];
      if (arity == 2) {
        out.push_back({theta, phi});
        continue;
      }
      for (int c = 0; c < n[2]; ++c) out.push_back({theta, phi, kTwoPi * c / n[2]});
    }
  }
  return out;
}

Complex evaluate_at(const AnyCoeffs& c, const std::vector<double>& p) {
  switch (family_of(c)) {
    case Family::circular:
      return evaluate_circular(std::get<CircularCoeffs>(c), PolarAngle2D(p[0]));
    case Family::cartesian2d:
      return evaluate_cartesian_uniaxial(std::get<CartesianCoeffsUniaxial>(c), unit_vector_2d(PolarAngle2D(p[0])));
    case Family::spherical:
      return evaluate_spherical(std::get<SphericalCoeffs>(c), SphericalAngles(p[0], p[1]));
    case Family::cartesian3d:
      return evaluate_cartesian_uniaxial(std::get<CartesianCoeffsUniaxial>(c),
                                         unit_vector_3d(SphericalAngles(p[0], p[1])));
    case Family::wigner:
      return evaluate_wigner(std::get<WignerCoeffs>(c), EulerAngles(p[0], p[1], p[2]));
    case Family::cartesian_biaxial:
      return evaluate_cartesian_biaxial(std::get<CartesianCoeffsBiaxial>(c),
                                        rotation_matrix_3d(EulerAngles(p[0], p[1], p[2])));
  }
  return 0.0;
}

GridSpec parse_box_grid(const std::string& spec, int dim) {
  // origin:size:cells, each a comma list of length dim
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw ParseError("--grid must look like x0,y0[,z0]:Lx,Ly[,Lz]:nx,ny[,nz]");
  const auto origin = parse_list(parts[0], "--grid origin");
  const auto size = parse_list(parts[1], "--grid size");
  const auto cells = parse_counts(parts[2], "--grid cells");
  const auto d = static_cast<std::size_t>(dim);
  if (origin.size() != d || size.size() != d || cells.size() != d) {
    throw ParseError("--grid needs " + std::to_string(dim) + " values in each of origin, size and cells");
  }
  GridSpec g;
  g.origin = Eigen::Map<const Eigen::VectorXd>(origin.data(), dim);
  g.size = Eigen::Map<const Eigen::VectorXd>(size.data(), dim);
  g.cells = cells;
  return g;
}

void emit(const std::string& output, const std::string& content) {
  if (output.empty() || output == "-") {
    std::cout << content;
  } else {
    write_text_atomic(output, content);
  }
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
    case ErrorKind::usage:
      return 2;
    case ErrorKind::domain:
      return 3;
    case ErrorKind::invariant:
      return 4;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orientational expansions: fit, convert, rotate, evaluate, order parameters"};
  app.require_subcommand(1);

  std::string input, snapshot, family, rule, output, to, euler, angle, at, grid;
  int max_order = 0;
  bool head_tail = false;

  auto* fit = app.add_subcommand("fit", "Fit expansion coefficients of a function or a snapshot");
  auto* fit_src = fit->add_option("--input", input, "Function of theta, phi, chi, u1..u3, R11..R33");
  auto* fit_snap = fit->add_option("--snapshot", snapshot, "Snapshot file (CSV or JSON); fits the empirical measure");
  fit_src->excludes(fit_snap);
  fit->add_option("--family", family, "circular|spherical|wigner|cartesian2d|cartesian3d|cartesian_biaxial")
      ->required();
  fit->add_option("--max-order", max_order, "Highest order L")->required();
  fit->add_option("--rule", rule, "Quadrature sizes n1[,n2[,n3]] (default: L+2, 2L+3, 2L+3)");
  fit->add_flag("--head-tail", head_tail, "Symmetrize snapshot orientations over +-u");
  fit->add_option("--output", output, "Coefficient file")->required();

  auto* conv = app.add_subcommand("convert", "Convert between angular and Cartesian coefficients");
  conv->add_option("--input", input, "Coefficient file")->required();
  conv->add_option("--to", to, "Target family")->required();
  conv->add_option("--output", output, "Coefficient file")->required();

  auto* rot = app.add_subcommand("rotate", "Coefficients of f(R x) for a rotation R");
  rot->add_option("--input", input, "Coefficient file")->required();
  auto* rot_e = rot->add_option("--euler", euler, "theta,phi,chi (3D families)");
  auto* rot_a = rot->add_option("--angle", angle, "phi (2D families)");
  rot_e->excludes(rot_a);
  rot->add_option("--output", output, "Coefficient file")->required();

  auto* ev = app.add_subcommand("evaluate", "Evaluate an expansion; prints CSV");
  ev->add_option("--input", input, "Coefficient file")->required();
  auto* ev_at = ev->add_option("--at", at, "Orientations 'a,b;c,d' or @file with one per line");
  auto* ev_grid = ev->add_option("--grid", grid, "Uniform grid n | ntheta,nphi | ntheta,nphi,nchi");
  ev_at->excludes(ev_grid);
  ev->add_option("--output", output, "CSV file (default stdout)");

  auto* op = app.add_subcommand("order-params", "Order parameters of a particle snapshot");
  op->add_option("--snapshot", snapshot, "Snapshot file (CSV or JSON)")->required();
  op->add_option("--grid", grid, "Cell grid x0,y0[,z0]:Lx,Ly[,Lz]:nx,ny[,nz]");
  op->add_flag("--head-tail", head_tail, "Symmetrize over +-u (uniaxial only)");
  op->add_option("--output", output, "JSON file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fit->parsed()) {
      const Family fam = parse_family(family);
      const Manifold m = manifold_of(fam);
      if (input.empty() == snapshot.empty()) throw UsageError("fit needs exactly one of --input or --snapshot");
      AnyCoeffs c;
      if (!snapshot.empty()) {
        const ParticleSnapshot s = read_snapshot(snapshot);
        c = fit_family(fam, [](const Variables&) { return Complex(1.0, 0.0); }, max_order,
                       rule_from_snapshot(s, m, head_tail));
        set_real(c, true);
      } else {
        const Expression e = Expression::parse(input, variables_of(fam));
        const QuadratureRule r = rule_from(rule, m, max_order);
        bool real = true;
        c = fit_family(
            fam,
            [&](const Variables& v) {
              const Complex y = e.evaluate(v);
              if (y.imag() != 0.0) real = false;
              return y;
            },
            max_order, r);
        set_real(c, real);
      }
      write_coefficients(output, c, kGenerator);
    } else if (conv->parsed()) {
      write_coefficients(output, convert_to(read_coefficients(input), parse_family(to)), kGenerator);
    } else if (rot->parsed()) {
      const auto e = euler.empty() ? std::vector<double>{} : parse_list(euler, "--euler");
      const auto a = angle.empty() ? std::vector<double>{} : parse_list(angle, "--angle");
      write_coefficients(output, rotate(read_coefficients(input), e, a), kGenerator);
    } else if (ev->parsed()) {
      const AnyCoeffs c = read_coefficients(input);
      const Family fam = family_of(c);
      const Manifold m = manifold_of(fam);
      const std::size_t arity = m == Manifold::S1 ? 1 : (m == Manifold::S2 ? 2 : 3);
      if (at.empty() == grid.empty()) throw UsageError("evaluate needs exactly one of --at or --grid");
      const auto points = at.empty() ? grid_points(grid, arity) : parse_points(at, arity);
      std::ostringstream csv;
      csv << (arity == 1 ? "phi" : arity == 2 ? "theta,phi" : "theta,phi,chi") << ",re,im\n";
      for (const auto& p : points) {
        const Complex v = evaluate_at(c, p);
        for (double x : p) csv << fmt17(x) << ',';
        csv << fmt17(v.real()) << ',' << fmt17(v.imag()) << '\n';
      }
      emit(output, csv.str());
    } else if (op->parsed()) {
      const ParticleSnapshot s = read_snapshot(snapshot);
      if (grid.empty()) {
        emit(output, summary_to_json(summary(s, head_tail), head_tail));
      } else {
        emit(output, field_to_json(field_from_snapshot(s, parse_box_grid(grid, s.dim()), head_tail), head_tail));
      }
    }
  } catch (const Error& e) {
    std::cerr << "orientx: error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "orientx: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
