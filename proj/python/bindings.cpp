#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quatsolve/errors.hpp"
#include "quatsolve/realsys.hpp"
#include "quatsolve/solver.hpp"

namespace py = pybind11;
using namespace quatsolve;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows to_rows(const Matrix4& m) {
  Rows r(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return r;
}

Matrix4 from_rows(const Rows& rows) {
  if (rows.size() != 4) throw py::value_error("expected a 4x4 matrix");
  Matrix4 m;
  for (int i = 0; i < 4; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (row.size() != 4) throw py::value_error("expected a 4x4 matrix");
    for (int j = 0; j < 4; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

using Pairs = std::vector<std::pair<Quaternion, Quaternion>>;

std::vector<Term> to_terms(const Pairs& pairs) {
  std::vector<Term> t;
  t.reserve(pairs.size());
  for (const auto& [c, b] : pairs) t.push_back({c, b});
  return t;
}

Pairs to_pairs(const std::vector<Term>& terms) {
  Pairs p;
  p.reserve(terms.size());
  for (const auto& t : terms) p.emplace_back(t.c, t.b);
  return p;
}

}  // namespace

PYBIND11_MODULE(_quatsolve, m) {
  m.doc() = "Closed-form solver for linear quaternionic equations";

  py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ArithmeticError);
  py::register_exception<SingularSystem>(m, "SingularSystem", PyExc_ArithmeticError);

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<>())
      .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x") = 0.0, py::arg("y") = 0.0,
           py::arg("z") = 0.0)
      .def(py::init([](const std::vector<double>& v) {
        if (v.size() != 4) throw py::value_error("expected [w, x, y, z]");
        return Quaternion{v[0], v[1], v[2], v[3]};
      }))
      .def_readwrite("w", &Quaternion::w)
      .def_readwrite("x", &Quaternion::x)
      .def_readwrite("y", &Quaternion::y)
      .def_readwrite("z", &Quaternion::z)
      .def("conj", [](const Quaternion& q) { return conj(q); })
      .def("inv", [](const Quaternion& q) { return inv(q); })
      .def("norm_sq", [](const Quaternion& q) { return norm_sq(q); })
      .def("dot", [](const Quaternion& a, const Quaternion& b) { return dot(a, b); })
      .def("to_list", [](const Quaternion& q) { return std::vector<double>{q.w, q.x, q.y, q.z}; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(float() * py::self)
      .def(py::self * float())
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Quaternion& q) {
        std::ostringstream os;
        os << "Quaternion(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
        return os.str();
      });
  py::implicitly_convertible<py::list, Quaternion>();
  py::implicitly_convertible<py::tuple, Quaternion>();
  py::implicitly_convertible<py::float_, Quaternion>();
  py::implicitly_convertible<py::int_, Quaternion>();

  py::class_<LinearEquation>(m, "LinearEquation")
      .def(py::init([](const Pairs& terms, const Quaternion& rhs, const Pairs& conj_terms) {
             return LinearEquation{to_terms(terms), to_terms(conj_terms), rhs};
           }),
           py::arg("terms"), py::arg("rhs"), py::arg("conj_terms") = Pairs{})
      .def_property_readonly("terms", [](const LinearEquation& e) { return to_pairs(e.plain_terms); })
      .def_property_readonly("conj_terms", [](const LinearEquation& e) { return to_pairs(e.conj_terms); })
      .def_readwrite("rhs", &LinearEquation::rhs)
      .def("evaluate", &evaluate_lhs)
      .def("residual", &residual);

  py::enum_<Summation>(m, "Summation").value("Naive", Summation::Naive).value("Symmetric", Summation::Symmetric);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("q", &SolveReport::q)
      .def_readonly("delta", &SolveReport::delta)
      .def_readonly("det_a", &SolveReport::det_a)
      .def_readonly("det_m", &SolveReport::det_m)
      .def_readonly("residual", &SolveReport::residual)
      .def_property_readonly("method", [](const SolveReport& r) { return std::string(to_string(r.method)); });

  auto opts = [](double tol, Summation s) {
    SolveOptions o;
    o.degeneracy_tol = tol;
    o.summation = s;
    return o;
  };
  m.def("solve", [opts](const LinearEquation& e, double tol, Summation s) { return solve(e, opts(tol, s)); },
        py::arg("eq"), py::arg("degeneracy_tol") = 1e-10, py::arg("summation") = Summation::Naive);
  m.def("solve_general",
        [opts](const LinearEquation& e, double tol, Summation s) { return solve_general(e, opts(tol, s)); },
        py::arg("eq"), py::arg("degeneracy_tol") = 1e-10, py::arg("summation") = Summation::Naive);
  m.def("solve_with_conjugate",
        [opts](const LinearEquation& e, double tol, Summation s) { return solve_with_conjugate(e, opts(tol, s)); },
        py::arg("eq"), py::arg("degeneracy_tol") = 1e-10, py::arg("summation") = Summation::Naive);
  m.def("solve_oracle", &solve_oracle, py::arg("eq"));
  m.def("solve_two_term", &solve_two_term, py::arg("c"), py::arg("b"), py::arg("d"));
  m.def("solve_sylvester", &solve_sylvester, py::arg("s"), py::arg("t"), py::arg("u"),
        py::arg("degeneracy_tol") = 1e-10);

  m.def(
      "delta", [](const Pairs& terms, Summation s) { return delta(to_terms(terms), s); }, py::arg("terms"),
      py::arg("summation") = Summation::Naive);
  m.def(
      "phi_apply",
      [](const Pairs& terms, const Quaternion& v, Summation s) { return phi_apply(to_terms(terms), v, s); },
      py::arg("terms"), py::arg("v"), py::arg("summation") = Summation::Naive);

  m.def("assemble_A", [](const LinearEquation& e) { return to_rows(assemble_A(e)); });
  m.def("assemble_M", [](const LinearEquation& e) { return to_rows(assemble_M(e)); });
  m.def("det4", [](const Rows& r) { return det4(from_rows(r)); });
  m.def("adjugate4", [](const Rows& r) { return to_rows(adjugate4(from_rows(r))); });
  m.def("gauss_solve", [](const Rows& r, const Quaternion& d) { return gauss_solve(from_rows(r), d); });

  m.def("bracket4", &bracket4);
  m.def("tri_dual", &tri_dual);
}
