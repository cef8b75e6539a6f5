#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thurston/cli.hpp"
#include "thurston/errors.hpp"
#include "thurston/slopes.hpp"
#include "thurston/specmat.hpp"

namespace py = pybind11;
using namespace thurston;

namespace {

// Rationals cross the boundary as "p/q" text; the Python side wraps them in
// fractions.Fraction.
using TextMatrix = std::vector<std::vector<std::string>>;

NonnegMatrix to_matrix(const TextMatrix& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(parse_rational(e));
    out.push_back(std::move(r));
  }
  return NonnegMatrix::from_rows(out);
}

IntMatrix2 to_int2(const std::array<std::array<std::int64_t, 2>, 2>& a) { return {a}; }

std::pair<std::string, std::string> text(const Interval& iv) { return {to_string(iv.lo), to_string(iv.hi)}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Thurston-obstruction computations";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.def("spectral_radius_class", [](const TextMatrix& rows) {
    const auto sc = spectral_radius_class(to_matrix(rows));
    return std::make_pair(std::string(to_string(sc.tag)), text(sc.isolating_interval));
  });
  m.def("leading_eigenvalue_interval", [](const TextMatrix& rows, const std::string& width) {
    return text(leading_eigenvalue_interval(to_matrix(rows), parse_rational(width)));
  });
  m.def("subinvariant_vector", [](const TextMatrix& rows) -> std::optional<std::vector<std::string>> {
    const auto v = exists_positive_subinvariant_vector(to_matrix(rows));
    if (!v) return std::nullopt;
    std::vector<std::string> out;
    for (const auto& x : *v) out.push_back(to_string(x));
    return out;
  });
  m.def("imprimitivity_index", [](const TextMatrix& rows) { return imprimitivity_index(to_matrix(rows)); });

  m.def("pullback_slope", [](const std::array<std::array<std::int64_t, 2>, 2>& a, std::int64_t p, std::int64_t q) {
    const auto pb = pullback_slope(TorusQuotientMap::normalize(to_int2(a)), Slope::from_vector(p, q));
    return py::make_tuple(py::make_tuple(pb.target.p(), pb.target.q()), pb.component_count, pb.component_degree);
  });
  m.def("canonical_obstruction", [](const std::array<std::array<std::int64_t, 2>, 2>& a) -> py::object {
    const auto c = canonical_obstruction_2222(TorusQuotientMap::normalize(to_int2(a)));
    if (!c) return py::none();
    return py::make_tuple(py::make_tuple(c->slope.p(), c->slope.q()), to_string(c->multiplier));
  });

  m.def(
      "run",
      [](const std::string& request) {
        const auto out = cli::run(cli::request_from_json(io::parse_document(request)));
        return std::make_pair(out.exit_code, cli::dump(out.report));
      },
      "Runs a serialised analysis request; returns (exit code, report text).");
  m.def("replay", [](const std::string& report) { return cli::replay(io::parse_document(report)).identical; });
}
