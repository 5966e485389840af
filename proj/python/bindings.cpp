#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ftq/cli.hpp"
#include "ftq/essential.hpp"

namespace py = pybind11;
using namespace ftq;

namespace {

Shape parse_shape(const std::string& name) {
  for (Shape s : {Shape::NonInvariant, Shape::Invariant, Shape::UnitsFF, Shape::MonomialFF})
    if (shape_name(s) == name) return s;
  throw std::invalid_argument("unknown shape " + name);
}

Hypothesis parse_hypothesis(const std::string& h) {
  if (h == "holds") return Hypothesis::holds;
  if (h == "fails") return Hypothesis::fails;
  if (h == "unknown") return Hypothesis::unknown;
  throw std::invalid_argument("detection must be holds, fails or unknown");
}

// Runs one CLI command and returns (exit code, report text).
std::pair<int, std::string> run(const cli::RunConfig& c) {
  std::ostringstream out;
  const int code = cli::run(c, out);
  return {code, out.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Farrell-Tate and Quillen computations for SL2 over S-integers";

  py::register_exception<DatumParseError>(m, "DatumParseError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "IntegerOverflowError", PyExc_OverflowError);

  m.def("smith_diagonal", [](const std::vector<std::vector<Int>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows[0].size();
        IntMatrix a(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix");
          for (std::size_t j = 0; j < cols; ++j) a(i, j) = rows[i][j];
        }
        return smith_normal_form(a).diag;
      }, py::arg("rows"), "Nonzero invariant factors of an integer matrix.");

  m.def("class_group", [](Int d) { return class_group_imaginary_quadratic(d).invariant_factors(); },
        py::arg("discriminant"), "Invariant factors of the class group of a negative fundamental discriminant.");

  m.def("s_unit_rank",
        [](std::size_t real, std::size_t complex, std::vector<std::pair<Int, Int>> finite) {
          return s_unit_rank(PlaceSpec{real, complex, std::move(finite), false});
        },
        py::arg("real_places"), py::arg("complex_places"), py::arg("finite_places") = std::vector<std::pair<Int, Int>>{});

  m.def("split_datum",
        [](std::vector<Int> factors, std::size_t unit_rank, Int ell) {
          return save_datum(build_split_datum(FinGenAbGroup(0, factors), unit_rank, ell));
        },
        py::arg("class_group"), py::arg("unit_rank"), py::arg("ell"), "Canonical text of a split datum.");

  m.def("load_datum", [](const std::string& path) { return save_datum(load_datum(path)); }, py::arg("path"),
        "Validates a datum file and returns its canonical text.");

  m.def("graded_dimension",
        [](const std::string& shape, std::size_t param, Int n) {
          return graded_dimension(ComponentRing{parse_shape(shape), param, {}}, n);
        },
        py::arg("shape"), py::arg("param"), py::arg("degree"));

  m.def("essential_product", [](Int ell, std::size_t n) { return essential_product({ell, n}).to_string(); },
        py::arg("ell"), py::arg("rank"));

  m.def("refined_gate",
        [](Int ell, Int n, bool zeta_in_K, bool s_infinite, bool s_ell, const std::string& detection) {
          return to_string(refined_gate({ell, n, zeta_in_K, s_infinite, s_ell, parse_hypothesis(detection)}).outcome);
        },
        py::arg("ell"), py::arg("n"), py::arg("zeta_in_K"), py::arg("S_contains_infinite"), py::arg("S_contains_ell"),
        py::arg("detection") = "unknown");

  m.def("analyze_number_field",
        [](std::optional<std::string> datum, std::optional<std::vector<Int>> split, Int unit_rank, Int ell) {
          cli::RunConfig c;
          c.command = cli::Command::analyze_nf;
          c.datum_path = std::move(datum);
          c.split_class_group = std::move(split);
          c.unit_rank = unit_rank;
          c.ell = ell;
          return run(c);
        },
        py::arg("datum") = py::none(), py::arg("split_class_group") = py::none(), py::arg("unit_rank") = 0,
        py::arg("ell") = 0);

  m.def("analyze_function_field",
        [](const std::string& curve, std::vector<Int> punctures, Int a, Int b, Int q, Int ell) {
          cli::RunConfig c;
          c.command = cli::Command::analyze_ff;
          c.curve = curve;
          c.punctures = std::move(punctures);
          c.a = a;
          c.b = b;
          c.q = q;
          c.ell = ell;
          return run(c);
        },
        py::arg("curve") = "p1", py::arg("punctures") = std::vector<Int>{}, py::arg("a") = 0, py::arg("b") = 0,
        py::arg("q"), py::arg("ell"));
}
