#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "lgkit/cyclotomic.hpp"
#include "lgkit/errors.hpp"
#include "lgkit/parse.hpp"
#include "lgkit/skein.hpp"
#include "lgkit/spectral.hpp"
#include "lgkit/tensor.hpp"
#include "lgkit/verify.hpp"
#include "lgkit/version.hpp"

namespace py = pybind11;
using namespace lgkit;

namespace {

mpz_class to_mpz(const py::handle& x) { return mpz_class(py::str(x).cast<std::string>()); }

// Accepts int, fractions.Fraction or anything Fraction() understands.
mpq_class to_mpq(const py::handle& x) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction")(x);
  mpq_class q(to_mpz(fraction.attr("numerator")), to_mpz(fraction.attr("denominator")));
  q.canonicalize();
  return q;
}

py::object to_int(const mpz_class& z) {
  const std::string digits = z.get_str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::object to_fraction(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(to_int(q.get_num()), to_int(q.get_den()));
}

BraidWord braid_arg(const std::string& word, std::optional<int> strands) { return parse_braid(word, strands); }

TensorAssignment fixture_arg(const std::optional<std::string>& path) {
  return path ? load_fixture(*path) : lg11_fixture();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Links-Gould and Alexander-Conway invariants";
  m.attr("__version__") = kVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MalformedDiagram>(m, "MalformedDiagram", PyExc_ValueError);
  py::register_exception<PoleAtRoot>(m, "PoleAtRoot", PyExc_ZeroDivisionError);
  py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded", PyExc_RuntimeError);
  py::register_exception<NotScalar>(m, "NotScalar", PyExc_ArithmeticError);

  py::class_<CycloFraction>(m, "RootValue")
      .def_property_readonly("order", &CycloFraction::modulus)
      .def("is_zero", &CycloFraction::is_zero)
      .def("__eq__", [](const CycloFraction& a, const CycloFraction& b) { return a == b; })
      .def("__str__", [](const CycloFraction& x) { return x.to_string(); })
      .def("__repr__", [](const CycloFraction& x) { return "RootValue(" + x.to_string() + ")"; });

  py::class_<RationalFn>(m, "RationalFunction")
      .def(py::init([](const std::string& text) { return parse_rational(text); }), py::arg("text") = "0")
      .def(py::init([](long c) { return RationalFn(c); }))
      .def("is_zero", &RationalFn::is_zero)
      .def("is_polynomial", &RationalFn::is_polynomial)
      .def("evaluate", [](const RationalFn& x, const py::object& t, const py::object& q) {
        return to_fraction(x.evaluate(to_mpq(t), to_mpq(q)));
      }, py::arg("t"), py::arg("q") = 1)
      .def("at_root", [](const RationalFn& x, int m, int r) { return reduce_at_root(x, m, r); },
           py::arg("m"), py::arg("r") = 1, "Value at q = exp(pi i r / m).")
      .def("at_root_of_unity", [](const RationalFn& x, int d, int power) {
        return reduce_at_root_of_unity(x, d, power);
      }, py::arg("d"), py::arg("power") = 1, "Value at q = exp(2 pi i power / d).")
      .def("involution_q", &RationalFn::involution_q)
      .def(-py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(long() + py::self)
      .def(long() - py::self)
      .def(long() * py::self)
      .def(long() / py::self)
      .def("__pow__", [](const RationalFn& x, int k) { return x.pow(k); })
      .def("__eq__", [](const RationalFn& a, const RationalFn& b) { return a == b; })
      .def("__str__", [](const RationalFn& x) { return x.to_string(); })
      .def("__repr__", [](const RationalFn& x) { return "RationalFunction('" + x.to_string() + "')"; });
  py::implicitly_convertible<long, RationalFn>();

  m.def("alexander", [](const std::string& word, std::optional<int> strands, const std::string& var,
                        std::size_t budget) {
    return conway(braid_arg(word, strands), ConwayOptions{budget}).to_string(var);
  }, py::arg("braid"), py::arg("strands") = py::none(), py::arg("var") = "s", py::arg("budget") = 64,
        "Alexander-Conway polynomial of the closure of a braid word, as text.");

  m.def("alexander_coefficients", [](const std::string& word, std::optional<int> strands, std::size_t budget) {
    const HalfLaurent poly = conway(braid_arg(word, strands), ConwayOptions{budget});
    py::dict out;
    for (const auto& [e, c] : poly.terms()) {
      out[py::int_(e)] = to_int(c);
    }
    return out;
  }, py::arg("braid"), py::arg("strands") = py::none(), py::arg("budget") = 64,
        "Map from powers of s = t^(1/2) to integer coefficients.");

  m.def("components", [](const std::string& word, std::optional<int> strands) {
    return braid_closure(braid_arg(word, strands)).component_count();
  }, py::arg("braid"), py::arg("strands") = py::none());

  m.def("xi", [](int mm, int i) { return RationalFn(xi(mm, i)); }, py::arg("m"), py::arg("i"));
  m.def("cl_P", [](int mm, int i) { return cl_P(mm, i); }, py::arg("m"), py::arg("i"));
  m.def("lg_closed_2braid", [](int mm, int k) { return lg_closed_2braid(mm, k); }, py::arg("m"), py::arg("k"));
  m.def("characteristic_check", [](int mm) { return characteristic_check(mm); }, py::arg("m"));

  m.def("tensor_invariant", [](const std::string& word, std::optional<int> strands,
                               const std::optional<std::string>& fixture) {
    return tensor_invariant(braid_arg(word, strands), fixture_arg(fixture));
  }, py::arg("braid"), py::arg("strands") = py::none(), py::arg("fixture") = py::none());

  m.def("validate_fixture", [](const std::optional<std::string>& path) {
    const TensorAssignment a = path ? load_fixture_unchecked(*path) : lg11_fixture();
    py::list out;
    for (const auto& c : validate(a).checks) out.append(py::make_tuple(c.name, c.passed, c.witness));
    return out;
  }, py::arg("path") = py::none(), "List of (check name, passed, witness) tuples.");

  m.def("suite_names", &suite_names);

  m.def("verify", [](const std::string& suite, std::optional<int> max_m, std::optional<int> max_k,
                     std::optional<int> samples, int jobs, std::uint64_t seed,
                     const std::optional<std::string>& fixture, bool corrupt_xi) {
    VerifyOptions o;
    o.max_m = max_m;
    o.max_k = max_k;
    o.samples = samples;
    o.jobs = jobs;
    o.seed = seed;
    o.fixture_path = fixture.value_or("");
    o.corrupt_xi = corrupt_xi;
    ReportDocument doc;
    doc.version = kVersion;
    {
      py::gil_scoped_release release;
      if (suite == "all") {
        for (const auto& name : suite_names()) doc.suites.push_back(run_suite(name, o));
      } else {
        doc.suites.push_back(run_suite(suite, o));
      }
    }
    return py::module_::import("json").attr("loads")(doc.to_json(false));
  }, py::arg("suite") = "all", py::arg("max_m") = py::none(), py::arg("max_k") = py::none(),
        py::arg("samples") = py::none(), py::arg("jobs") = 1, py::arg("seed") = VerifyOptions{}.seed,
        py::arg("fixture") = py::none(), py::arg("corrupt_xi") = false,
        "Runs verification suites and returns the report payload as a dict.");
}
