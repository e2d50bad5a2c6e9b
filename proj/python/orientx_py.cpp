#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orientx/convert.hpp"
#include "orientx/errors.hpp"
#include "orientx/expansion.hpp"
#include "orientx/io.hpp"
#include "orientx/orderparams.hpp"
#include "orientx/specfun.hpp"

namespace py = pybind11;
using namespace orientx;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<py::ssize_t> shape_of(const ComplexTensor& t) {
  return std::vector<py::ssize_t>(static_cast<std::size_t>(t.rank()), t.dim());
}

CArray to_numpy(const ComplexTensor& t) {
  CArray a(shape_of(t));
  std::copy(t.data().begin(), t.data().end(), a.mutable_data());
  return a;
}

RArray to_numpy(const RealTensor& t) {
  RArray a(std::vector<py::ssize_t>(static_cast<std::size_t>(t.rank()), t.dim()));
  std::copy(t.data().begin(), t.data().end(), a.mutable_data());
  return a;
}

ComplexTensor from_numpy(const CArray& a, int dim, int rank) {
  if (a.ndim() != rank) throw UsageError("expected an array of rank " + std::to_string(rank));
  for (py::ssize_t k = 0; k < a.ndim(); ++k) {
    if (a.shape(k) != dim) throw UsageError("every axis must have length " + std::to_string(dim));
  }
  ComplexTensor t(dim, rank);
  std::copy(a.data(), a.data() + a.size(), t.data().begin());
  return t;
}

UnitVector unit_from(const RArray& a) {
  Eigen::VectorXd v(a.size());
  for (py::ssize_t k = 0; k < a.size(); ++k) v(k) = a.data()[k];
  return UnitVector::from_components(v, 1e-10);
}

RArray vector_numpy(const UnitVector& u) {
  RArray a(std::vector<py::ssize_t>{u.dim()});
  for (int k = 0; k < u.dim(); ++k) a.mutable_data()[k] = u[static_cast<std::size_t>(k)];
  return a;
}

RotationMatrix3 rotation_from(const RArray& a) {
  if (a.ndim() != 2 || a.shape(0) != 3 || a.shape(1) != 3) throw UsageError("expected a 3x3 matrix");
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = a.at(i, j);
  }
  return RotationMatrix3::from_matrix(m, 1e-10);
}

RArray matrix_numpy(const Eigen::MatrixXd& m) {
  RArray a(std::vector<py::ssize_t>{m.rows(), m.cols()});
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) a.mutable_at(i, j) = m(i, j);
  }
  return a;
}

QuadratureRule rule_for(Manifold m, int L, const std::vector<int>& sizes) {
  if (sizes.empty()) return default_rule(m, L);
  const std::size_t need = m == Manifold::S1 ? 1 : m == Manifold::S2 ? 2 : 3;
  if (sizes.size() != need) throw UsageError("rule needs " + std::to_string(need) + " size(s)");
  if (m == Manifold::S1) return rule_s1(sizes[0]);
  if (m == Manifold::S2) return rule_s2(sizes[0], sizes[1]);
  return rule_so3(sizes[0], sizes[1], sizes[2]);
}

OrderParameterSummary summary_from_arrays(const RArray& positions, const RArray& orientations, bool biaxial,
                                          bool head_tail) {
  if (positions.ndim() != 2) throw UsageError("positions must be an (N, d) array");
  const auto n = positions.shape(0);
  const int d = static_cast<int>(positions.shape(1));
  ParticleSnapshot s(d, biaxial);
  for (py::ssize_t k = 0; k < n; ++k) {
    Eigen::VectorXd x(d);
    for (int i = 0; i < d; ++i) x(i) = positions.at(k, i);
    if (biaxial) {
      if (orientations.ndim() != 3 || orientations.shape(0) != n) throw UsageError("rotations must be (N, 3, 3)");
      Eigen::Matrix3d m;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(i, j) = orientations.at(k, i, j);
      }
      s.add(x, RotationMatrix3::from_matrix(m, 1e-10));
    } else {
      if (orientations.ndim() != 2 || orientations.shape(0) != n || orientations.shape(1) != d) {
        throw UsageError("directions must be (N, d)");
      }
      Eigen::VectorXd u(d);
      for (int i = 0; i < d; ++i) u(i) = orientations.at(k, i);
      s.add(x, UnitVector::from_components(u, 1e-10));
    }
  }
  return summary(s, head_tail);
}

py::dict summary_dict(const OrderParameterSummary& r) {
  py::dict d;
  d["dim"] = r.dim;
  d["biaxial"] = r.biaxial;
  d["rho_total"] = r.rho_total;
  d["P"] = to_numpy(r.P);
  d["Q"] = to_numpy(r.Q);
  return d;
}

template <class C>
void bind_indexed_common(py::class_<C>& cls) {
  cls.def_property_readonly("max_order", &C::max_order)
      .def_readwrite("real", &C::real)
      .def("to_json", [](const C& c) { return coefficients_to_json(c, "orientx-python"); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orientational expansions on S1, S2 and SO(3)";
  m.attr("__version__") = "0.1.0";

  static py::exception<Error> base(m, "OrientxError", PyExc_ValueError);
  static py::exception<ParseError> parse_exc(m, "ParseError", base.ptr());
  static py::exception<DomainError> domain_exc(m, "DomainError", base.ptr());
  static py::exception<UsageError> usage_exc(m, "UsageError", base.ptr());
  static py::exception<InvariantError> invariant_exc(m, "InvariantError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_exc(e.what());
    } catch (const DomainError& e) {
      domain_exc(e.what());
    } catch (const UsageError& e) {
      usage_exc(e.what());
    } catch (const InvariantError& e) {
      invariant_exc(e.what());
    }
  });

  // geometry
  m.def("unit_vector_2d", [](double phi) { return vector_numpy(unit_vector_2d(PolarAngle2D(phi))); }, py::arg("phi"));
  m.def("unit_vector_3d",
        [](double theta, double phi) { return vector_numpy(unit_vector_3d(SphericalAngles(theta, phi))); },
        py::arg("theta"), py::arg("phi"));
  m.def("rotation_matrix_2d", [](double phi) { return matrix_numpy(rotation_matrix_2d(phi).matrix()); },
        py::arg("phi"));
  m.def("rotation_matrix_3d",
        [](double theta, double phi, double chi) {
          return matrix_numpy(rotation_matrix_3d(EulerAngles(theta, phi, chi)).matrix());
        },
        py::arg("theta"), py::arg("phi"), py::arg("chi"));
  m.def("euler_angles_from_matrix", [](const RArray& r) {
    const EulerAngles e = euler_angles_from_matrix(rotation_from(r));
    return py::make_tuple(e.theta(), e.phi(), e.chi());
  });

  // special functions
  m.def("assoc_legendre", &assoc_legendre, py::arg("l"), py::arg("m"), py::arg("x"));
  m.def("spherical_harmonic",
        [](int l, int mm, double theta, double phi) { return spherical_harmonic(l, mm, SphericalAngles(theta, phi)); },
        py::arg("l"), py::arg("m"), py::arg("theta"), py::arg("phi"));
  m.def("wigner_small_d", &wigner_small_d, py::arg("l"), py::arg("m"), py::arg("n"), py::arg("theta"));
  m.def("wigner_D",
        [](int l, int mm, int n, double theta, double phi, double chi) {
          return wigner_D(l, mm, n, EulerAngles(theta, phi, chi));
        },
        py::arg("l"), py::arg("m"), py::arg("n"), py::arg("theta"), py::arg("phi"), py::arg("chi"));
  m.def("tensor_poly", [](int d, int l, const RArray& u) { return to_numpy(tensor_poly(d, l, unit_from(u))); },
        py::arg("d"), py::arg("l"), py::arg("u"));

  // coefficient containers
  py::class_<CircularCoeffs> circ(m, "CircularCoeffs");
  circ.def(py::init<int>(), py::arg("max_order"))
      .def("__getitem__", [](const CircularCoeffs& c, int k) { return c.at(k); })
      .def("__setitem__", [](CircularCoeffs& c, int k, Complex v) { c.at(k) = v; });
  bind_indexed_common(circ);

  using LM = std::pair<int, int>;
  py::class_<SphericalCoeffs> sph(m, "SphericalCoeffs");
  sph.def(py::init<int>(), py::arg("max_order"))
      .def("__getitem__", [](const SphericalCoeffs& c, LM i) { return c.at(i.first, i.second); })
      .def("__setitem__", [](SphericalCoeffs& c, LM i, Complex v) { c.at(i.first, i.second) = v; });
  bind_indexed_common(sph);

  using LMN = std::tuple<int, int, int>;
  py::class_<WignerCoeffs> wig(m, "WignerCoeffs");
  wig.def(py::init<int>(), py::arg("max_order"))
      .def("__getitem__",
           [](const WignerCoeffs& c, LMN i) { return c.at(std::get<0>(i), std::get<1>(i), std::get<2>(i)); })
      .def("__setitem__",
           [](WignerCoeffs& c, LMN i, Complex v) { c.at(std::get<0>(i), std::get<1>(i), std::get<2>(i)) = v; });
  bind_indexed_common(wig);

  py::class_<CartesianCoeffsUniaxial>(m, "CartesianCoeffsUniaxial")
      .def(py::init<int, int>(), py::arg("dim"), py::arg("max_order"))
      .def_readonly("dim", &CartesianCoeffsUniaxial::dim)
      .def_readonly("max_order", &CartesianCoeffsUniaxial::max_order)
      .def_readwrite("real", &CartesianCoeffsUniaxial::real)
      .def("order", [](const CartesianCoeffsUniaxial& c, int l) { return to_numpy(c.orders.at(static_cast<std::size_t>(l))); })
      .def("set_order",
           [](CartesianCoeffsUniaxial& c, int l, const CArray& a) {
             c.orders.at(static_cast<std::size_t>(l)) = from_numpy(a, c.dim, l);
           })
      .def("to_json", [](const CartesianCoeffsUniaxial& c) { return coefficients_to_json(c, "orientx-python"); });

  py::class_<CartesianCoeffsBiaxial>(m, "CartesianCoeffsBiaxial")
      .def(py::init<int>(), py::arg("max_order"))
      .def_readonly("max_order", &CartesianCoeffsBiaxial::max_order)
      .def_readwrite("real", &CartesianCoeffsBiaxial::real)
      .def("order", [](const CartesianCoeffsBiaxial& c, int l) { return to_numpy(c.orders.at(static_cast<std::size_t>(l))); })
      .def("set_order",
           [](CartesianCoeffsBiaxial& c, int l, const CArray& a) {
             c.orders.at(static_cast<std::size_t>(l)) = from_numpy(a, 3, 2 * l);
           })
      .def("to_json", [](const CartesianCoeffsBiaxial& c) { return coefficients_to_json(c, "orientx-python"); });

  m.def("from_json", &coefficients_from_json, py::arg("text"));

  // fitting; callables take angles (theta, phi, chi) or a numpy unit vector
  const auto L = py::arg("max_order");
  const auto rule = py::arg("rule") = std::vector<int>{};
  m.def("fit_circular",
        [](const std::function<Complex(double)>& f, int max_order, const std::vector<int>& sizes) {
          return fit_circular([&](const PolarAngle2D& a) { return f(a.phi()); }, max_order,
                              rule_for(Manifold::S1, max_order, sizes));
        },
        py::arg("f"), L, rule);
  m.def("fit_spherical",
        [](const std::function<Complex(double, double)>& f, int max_order, const std::vector<int>& sizes) {
          return fit_spherical([&](const SphericalAngles& a) { return f(a.theta(), a.phi()); }, max_order,
                               rule_for(Manifold::S2, max_order, sizes));
        },
        py::arg("f"), L, rule);
  m.def("fit_wigner",
        [](const std::function<Complex(double, double, double)>& f, int max_order, const std::vector<int>& sizes) {
          return fit_wigner([&](const EulerAngles& w) { return f(w.theta(), w.phi(), w.chi()); }, max_order,
                            rule_for(Manifold::SO3, max_order, sizes));
        },
        py::arg("f"), L, rule);
  m.def("fit_cartesian_uniaxial",
        [](const std::function<Complex(RArray)>& f, int d, int max_order, const std::vector<int>& sizes) {
          return fit_cartesian_uniaxial([&](const UnitVector& u) { return f(vector_numpy(u)); }, d, max_order,
                                        rule_for(d == 2 ? Manifold::S1 : Manifold::S2, max_order, sizes));
        },
        py::arg("f"), py::arg("d"), L, rule);
  m.def("fit_cartesian_biaxial",
        [](const std::function<Complex(RArray)>& f, int max_order, const std::vector<int>& sizes) {
          return fit_cartesian_biaxial(
              [&](const EulerAngles& w) { return f(matrix_numpy(rotation_matrix_3d(w).matrix())); }, max_order,
              rule_for(Manifold::SO3, max_order, sizes));
        },
        py::arg("f"), L, rule);

  // evaluation
  m.def("evaluate", [](const CircularCoeffs& c, double phi) { return evaluate_circular(c, PolarAngle2D(phi)); },
        py::arg("c"), py::arg("phi"));
  m.def("evaluate",
        [](const SphericalCoeffs& c, double theta, double phi) {
          return evaluate_spherical(c, SphericalAngles(theta, phi));
        },
        py::arg("c"), py::arg("theta"), py::arg("phi"));
  m.def("evaluate",
        [](const WignerCoeffs& c, double theta, double phi, double chi) {
          return evaluate_wigner(c, EulerAngles(theta, phi, chi));
        },
        py::arg("c"), py::arg("theta"), py::arg("phi"), py::arg("chi"));
  m.def("evaluate",
        [](const CartesianCoeffsUniaxial& c, const RArray& u) { return evaluate_cartesian_uniaxial(c, unit_from(u)); },
        py::arg("c"), py::arg("u"));
  m.def("evaluate",
        [](const CartesianCoeffsBiaxial& c, const RArray& r) { return evaluate_cartesian_biaxial(c, rotation_from(r)); },
        py::arg("c"), py::arg("R"));

  // rotation
  m.def("rotate", &rotate_circular, py::arg("c"), py::arg("phi"));
  m.def("rotate",
        [](const SphericalCoeffs& c, double theta, double phi, double chi) {
          return rotate_spherical(c, EulerAngles(theta, phi, chi));
        },
        py::arg("c"), py::arg("theta"), py::arg("phi"), py::arg("chi"));
  m.def("rotate",
        [](const WignerCoeffs& c, double theta, double phi, double chi) {
          return rotate_wigner(c, EulerAngles(theta, phi, chi));
        },
        py::arg("c"), py::arg("theta"), py::arg("phi"), py::arg("chi"));
  m.def("rotate",
        [](const CartesianCoeffsUniaxial& c, const RArray& r) {
          Eigen::MatrixXd mat(r.shape(0), r.ndim() == 2 ? r.shape(1) : 0);
          for (Eigen::Index i = 0; i < mat.rows(); ++i) {
            for (Eigen::Index j = 0; j < mat.cols(); ++j) mat(i, j) = r.at(i, j);
          }
          return rotate_cartesian_uniaxial(c, mat);
        },
        py::arg("c"), py::arg("R"));
  m.def("rotate",
        [](const CartesianCoeffsBiaxial& c, const RArray& r) { return rotate_cartesian_biaxial(c, rotation_from(r)); },
        py::arg("c"), py::arg("R"));

  // conversion
  m.def("circular_to_cartesian_2d", &circular_to_cartesian_2d);
  m.def("cartesian_to_circular_2d", &cartesian_to_circular_2d);
  m.def("spherical_to_cartesian_3d", &spherical_to_cartesian_3d);
  m.def("cartesian_to_spherical_3d", &cartesian_to_spherical_3d);
  m.def("wigner_to_cartesian_biaxial", &wigner_to_cartesian_biaxial);
  m.def("cartesian_biaxial_to_wigner", &cartesian_biaxial_to_wigner);
  m.def("canonicalize", py::overload_cast<const CartesianCoeffsUniaxial&>(&canonicalize));
  m.def("canonicalize", py::overload_cast<const CartesianCoeffsBiaxial&>(&canonicalize));

  // order parameters
  m.def("order_parameters",
        [](const RArray& positions, const RArray& orientations, bool biaxial, bool head_tail) {
          return summary_dict(summary_from_arrays(positions, orientations, biaxial, head_tail));
        },
        py::arg("positions"), py::arg("orientations"), py::arg("biaxial") = false, py::arg("head_tail") = false,
        "positions (N, d); orientations are unit vectors (N, d) or rotation matrices (N, 3, 3) if biaxial");
  m.def("nematic_analysis", [](const RArray& q) {
    if (q.ndim() != 2 || q.shape(0) != q.shape(1)) throw UsageError("Q must be a square matrix");
    const int d = static_cast<int>(q.shape(0));
    RealTensor t(d, 2);
    std::copy(q.data(), q.data() + q.size(), t.data().begin());
    const NematicAnalysis a = nematic_analysis(t);
    return py::make_tuple(std::vector<double>(a.eigenvalues.data(), a.eigenvalues.data() + a.eigenvalues.size()),
                          std::vector<double>(a.director.data(), a.director.data() + a.director.size()),
                          a.degenerate);
  });
}
