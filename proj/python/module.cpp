#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgwa/gwa.hpp"
#include "qgwa/report.hpp"
#include "qgwa/request.hpp"

namespace py = pybind11;

namespace {

qgwa::ReportFormat format_of(const std::string& name) {
  if (name == "json") return qgwa::ReportFormat::Json;
  if (name == "text") return qgwa::ReportFormat::Text;
  throw py::value_error("format must be 'json' or 'text'");
}

qgwa::BaseKind base_of(const std::string& name) {
  if (name == "poly") return qgwa::BaseKind::Poly;
  if (name == "laurent") return qgwa::BaseKind::Laurent;
  throw py::value_error("base must be 'poly' or 'laurent'");
}

}  // namespace

PYBIND11_MODULE(_qgwa, m) {
  m.doc() = "Fixed rings of quantum generalized Weyl algebras";

  auto base_error = py::register_exception<qgwa::Error>(m, "QgwaError", PyExc_ValueError);
  py::register_exception<qgwa::ParseFailure>(m, "ParseError", base_error.ptr());

  m.def(
      "analyze",
      [](const std::string& text, const std::string& format) {
        const qgwa::AnalysisRequest request = qgwa::parse_request(text);
        py::gil_scoped_release release;
        const qgwa::AnalysisReport report = qgwa::run_analysis(request);
        return std::make_pair(qgwa::emit_report(report, format_of(format)), report.exit_code());
      },
      py::arg("text"), py::arg("format") = "json",
      "Runs the pipeline on an input document; returns (report, exit_code).");

  m.def(
      "canonical", [](const std::string& text) { return qgwa::emit_request(qgwa::parse_request(text)); },
      py::arg("text"));

  m.def(
      "expand",
      [](const std::string& a, int conductor) {
        return qgwa::expand(qgwa::parse_factored_poly(a, conductor)).to_string();
      },
      py::arg("a"), py::arg("conductor") = 1);

  // y^m x^m (side "yx") or x^m y^m (side "xy") as a polynomial in h.
  m.def(
      "power_product",
      [](const std::string& base, const std::string& q, const std::string& a, int m, const std::string& side,
         int conductor) {
        if (m < 1) throw py::value_error("m must be positive");
        if (side != "yx" && side != "xy") throw py::value_error("side must be 'yx' or 'xy'");
        const auto R = qgwa::QuantumGwa::create(base_of(base), qgwa::parse_field_expr(q, conductor),
                                                qgwa::parse_factored_poly(a, conductor));
        return (side == "yx" ? R->yx_product(m) : R->xy_product(m)).to_string();
      },
      py::arg("base"), py::arg("q"), py::arg("a"), py::arg("m"), py::arg("side") = "yx", py::arg("conductor") = 1);

  m.attr("__version__") = "0.1.0";
}
