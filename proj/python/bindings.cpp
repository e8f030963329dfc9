#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <string>
#include <vector>

#include "maxplus/errors.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/optimize.hpp"
#include "maxplus/problem_io.hpp"
#include "maxplus/residuation.hpp"

namespace py = pybind11;

namespace {

// ExtScalar crosses the boundary as a plain float; ±inf are the extremes.
maxplus::Vec to_vec(const std::vector<double>& v) {
  maxplus::Vec out;
  out.reserve(v.size());
  for (double x : v) out.emplace_back(x);
  return out;
}

std::vector<double> from_vec(const maxplus::Vec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (maxplus::ExtScalar x : v) out.push_back(x.value());
  return out;
}

maxplus::Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw maxplus::DimensionMismatch("matrix dimensions must be at least 1x1");
  maxplus::Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size())
      throw maxplus::DimensionMismatch("matrix rows must all have the same length");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = maxplus::ExtScalar{rows[i][j]};
  }
  return m;
}

std::vector<std::vector<double>> matrix_to_rows(const maxplus::Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).value();
  return rows;
}

std::string constraint_name(maxplus::Constraint kind) {
  switch (kind) {
    case maxplus::Constraint::EqualTo:
      return "eq";
    case maxplus::Constraint::AtMost:
      return "le";
    case maxplus::Constraint::Free:
      return "free";
  }
  return "free";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "max-plus algebra and global optimization over an affine constraint";

  // Translators are tried newest-first, so register the catch-all base
  // before the specific errors.
  py::register_exception<maxplus::Error>(m, "MaxPlusError", PyExc_ValueError);
  py::register_exception<maxplus::UndefinedExtOp>(m, "UndefinedExtOp",
                                                  PyExc_ValueError);
  py::register_exception<maxplus::DimensionMismatch>(m, "DimensionMismatch",
                                                     PyExc_ValueError);
  py::register_exception<maxplus::EmptyObjective>(m, "EmptyObjective",
                                                  PyExc_ValueError);
  py::register_exception<maxplus::ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("EPS") = maxplus::eps;
  m.attr("INF") = maxplus::inf;
  m.attr("DEFAULT_TOL") = maxplus::default_tol;

  m.def("oplus",
        [](double a, double b) {
          return maxplus::oplus(maxplus::ExtScalar{a}, maxplus::ExtScalar{b})
              .value();
        },
        py::arg("a"), py::arg("b"), "max{a, b} on the extended scale");
  m.def("otimes",
        [](double a, double b) {
          return maxplus::otimes(maxplus::ExtScalar{a}, maxplus::ExtScalar{b})
              .value();
        },
        py::arg("a"), py::arg("b"), "a + b with -inf absorbing");
  m.def("ext_sub",
        [](double a, double b) {
          return maxplus::ext_sub(maxplus::ExtScalar{a}, maxplus::ExtScalar{b})
              .value();
        },
        py::arg("a"), py::arg("b"),
        "extended subtraction; raises on the undefined infinity pairs");
  m.def("ext_scale",
        [](double p, double a) {
          return maxplus::ext_scale(p, maxplus::ExtScalar{a}).value();
        },
        py::arg("p"), py::arg("a"), "p * a with 0 * (±inf) = 0");

  py::class_<maxplus::Matrix>(m, "Matrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_property_readonly("rows", &maxplus::Matrix::rows)
      .def_property_readonly("cols", &maxplus::Matrix::cols)
      .def("at",
           [](const maxplus::Matrix& self, std::size_t i, std::size_t j) {
             if (i >= self.rows() || j >= self.cols())
               throw maxplus::DimensionMismatch("matrix index out of range");
             return self(i, j).value();
           },
           py::arg("i"), py::arg("j"))
      .def("to_rows", &matrix_to_rows)
      .def("__eq__",
           [](const maxplus::Matrix& a, const maxplus::Matrix& b) {
             return a == b;
           })
      .def("__repr__", [](const maxplus::Matrix& self) {
        return "Matrix(" + std::to_string(self.rows()) + "x" +
               std::to_string(self.cols()) + ")";
      });

  m.def("mat_oplus", &maxplus::mat_oplus, py::arg("a"), py::arg("b"));
  m.def("mat_otimes", &maxplus::mat_otimes, py::arg("a"), py::arg("b"));
  m.def("mat_vec",
        [](const maxplus::Matrix& a, const std::vector<double>& x) {
          return from_vec(maxplus::otimes(a, to_vec(x)));
        },
        py::arg("a"), py::arg("x"), "A ⊗ x");
  m.def("leq",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return maxplus::leq(to_vec(a), to_vec(b));
        },
        py::arg("a"), py::arg("b"), "componentwise order on vectors");
  m.def("mat_leq",
        [](const maxplus::Matrix& a, const maxplus::Matrix& b) {
          return maxplus::leq(a, b);
        },
        py::arg("a"), py::arg("b"), "componentwise order on matrices");

  m.def("greatest_subsolution",
        [](const maxplus::Matrix& a, const std::vector<double>& b) {
          return from_vec(
              maxplus::greatest_subsolution(maxplus::LinearSystem{a, to_vec(b)}));
        },
        py::arg("a"), py::arg("b"),
        "greatest x with A ⊗ x <= b (components may be ±inf)");
  m.def("is_system_solvable",
        [](const maxplus::Matrix& a, const std::vector<double>& b) {
          return maxplus::is_system_solvable(maxplus::LinearSystem{a, to_vec(b)});
        },
        py::arg("a"), py::arg("b"));

  py::class_<maxplus::OptProblem>(m, "OptProblem")
      .def(py::init<maxplus::Matrix, std::vector<double>, double>(),
           py::arg("a"), py::arg("k"), py::arg("c"))
      .def(py::init([](const std::vector<std::vector<double>>& rows,
                       const std::vector<double>& k, double c) {
             return maxplus::OptProblem(matrix_from_rows(rows), k, c);
           }),
           py::arg("rows"), py::arg("k"), py::arg("c"))
      .def_readonly("a", &maxplus::OptProblem::A)
      .def_readonly("k", &maxplus::OptProblem::k)
      .def_readonly("c", &maxplus::OptProblem::c)
      .def_property_readonly("num_rows", &maxplus::OptProblem::num_rows)
      .def_property_readonly("num_vars", &maxplus::OptProblem::num_vars);

  py::class_<maxplus::PreprocessReport>(m, "PreprocessReport")
      .def_readonly("dropped_rows", &maxplus::PreprocessReport::dropped_rows)
      .def_readonly("eliminated_vars",
                    &maxplus::PreprocessReport::eliminated_vars)
      .def_readonly("kept_rows", &maxplus::PreprocessReport::kept_rows)
      .def_readonly("kept_vars", &maxplus::PreprocessReport::kept_vars)
      .def_readonly("reduced", &maxplus::PreprocessReport::reduced);

  py::class_<maxplus::SolveReport>(m, "SolveReport")
      .def_readonly("preprocess", &maxplus::SolveReport::preprocess)
      .def_property_readonly("lower_bound",
                             [](const maxplus::SolveReport& r) {
                               return from_vec(r.lower_bound);
                             })
      .def_property_readonly("greatest_subsolution",
                             [](const maxplus::SolveReport& r) {
                               return from_vec(r.greatest_subsolution);
                             })
      .def_readonly("criterion_sum", &maxplus::SolveReport::criterion_sum)
      .def_readonly("tol", &maxplus::SolveReport::tol)
      .def_readonly("solvable", &maxplus::SolveReport::solvable)
      .def_readonly("unique", &maxplus::SolveReport::unique)
      .def_property_readonly(
          "solutions",
          [](const maxplus::SolveReport& r)
              -> std::optional<std::vector<std::pair<std::string, double>>> {
            if (!r.solutions) return std::nullopt;
            std::vector<std::pair<std::string, double>> out;
            for (const auto& vc : r.solutions->vars)
              out.emplace_back(constraint_name(vc.kind), vc.bound.value());
            return out;
          },
          "per-variable ('eq'|'le'|'free', bound) pairs; bound is meaningless "
          "for 'free'")
      .def_property_readonly(
          "alternative",
          [](const maxplus::SolveReport& r) -> std::optional<std::vector<double>> {
            if (!r.alternative) return std::nullopt;
            return from_vec(*r.alternative);
          });

  m.def("preprocess", &maxplus::preprocess, py::arg("p"));
  m.def("greatest_lower_bound",
        [](const maxplus::OptProblem& p) {
          return from_vec(maxplus::greatest_lower_bound(p));
        },
        py::arg("p"), "run preprocess first; expects a reduced problem");
  m.def("check_criterion",
        [](const maxplus::OptProblem& p, const std::vector<double>& x_star,
           const std::vector<double>& b, double tol) {
          return maxplus::check_criterion(p, to_vec(x_star), to_vec(b), tol);
        },
        py::arg("p"), py::arg("x_star"), py::arg("b"),
        py::arg("tol") = maxplus::default_tol);
  m.def("solve", &maxplus::solve, py::arg("p"),
        py::arg("tol") = maxplus::default_tol);
  m.def("construct_alternative",
        [](const maxplus::OptProblem& p, const std::vector<double>& x_star,
           std::size_t j0) {
          return from_vec(maxplus::construct_alternative(p, to_vec(x_star), j0));
        },
        py::arg("p"), py::arg("x_star"), py::arg("j0"));
  m.def("evaluate",
        [](const maxplus::OptProblem& p, const std::vector<double>& x) {
          auto ev = maxplus::evaluate(p, x);
          return py::make_tuple(from_vec(ev.objective), ev.constraint_value);
        },
        py::arg("p"), py::arg("x"),
        "returns (F(x), sum_j k_j x_j) for a finite point");

  py::class_<maxplus::SampleConfig>(m, "SampleConfig")
      .def(py::init([](double box_radius, std::size_t grid_points_per_axis,
                       std::uint64_t seed, std::size_t random_points,
                       double tol) {
             maxplus::SampleConfig cfg;
             cfg.box_radius = box_radius;
             cfg.grid_points_per_axis = grid_points_per_axis;
             cfg.seed = seed;
             cfg.random_points = random_points;
             cfg.tol = tol;
             return cfg;
           }),
           py::arg("box_radius") = 5.0, py::arg("grid_points_per_axis") = 7,
           py::arg("seed") = 0, py::arg("random_points") = 10000,
           py::arg("tol") = maxplus::default_tol)
      .def_readwrite("box_radius", &maxplus::SampleConfig::box_radius)
      .def_readwrite("grid_points_per_axis",
                     &maxplus::SampleConfig::grid_points_per_axis)
      .def_readwrite("seed", &maxplus::SampleConfig::seed)
      .def_readwrite("random_points", &maxplus::SampleConfig::random_points)
      .def_readwrite("tol", &maxplus::SampleConfig::tol);

  py::class_<maxplus::OracleVerdict>(m, "OracleVerdict")
      .def_readonly("consistent", &maxplus::OracleVerdict::consistent)
      .def_readonly("samples_checked", &maxplus::OracleVerdict::samples_checked)
      .def_readonly("detail", &maxplus::OracleVerdict::detail)
      .def_readonly("counterexample", &maxplus::OracleVerdict::counterexample);

  m.def("sample_constraint_points", &maxplus::sample_constraint_points,
        py::arg("p"), py::arg("center"), py::arg("cfg") = maxplus::SampleConfig{});
  m.def("verify_lower_bound",
        [](const maxplus::OptProblem& p, const std::vector<double>& b,
           const std::vector<std::vector<double>>& samples) {
          return maxplus::verify_lower_bound(p, to_vec(b), samples);
        },
        py::arg("p"), py::arg("b"), py::arg("samples"));
  m.def("verify_optimality", &maxplus::verify_optimality, py::arg("p"),
        py::arg("report"), py::arg("cfg") = maxplus::SampleConfig{});

  m.def("parse_problem",
        [](const std::string& text) { return maxplus::parse_problem(text); },
        py::arg("text"));
  m.def("format_problem", &maxplus::format_problem, py::arg("p"));
  m.def("render_report_text",
        [](const maxplus::SolveReport& r) {
          return maxplus::render_report_text(r, std::nullopt);
        },
        py::arg("report"));
  m.def("render_report_json",
        [](const maxplus::SolveReport& r) {
          return maxplus::render_report_json(r, std::nullopt);
        },
        py::arg("report"));
}
