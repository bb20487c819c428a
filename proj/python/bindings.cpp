#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fhyper/cli.hpp"
#include "fhyper/suites.hpp"
#include "fhyper/toric.hpp"
#include "fhyper/variety.hpp"

namespace py = pybind11;
using namespace fhyper;

namespace {

py::object to_fraction(const Rat& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(rat_to_string(value));
}

py::dict to_dict(const CountReport& r) {
  py::dict d;
  d["label"] = r.label;
  d["q"] = r.q;
  d["lam"] = r.lam;
  d["brute"] = to_fraction(r.brute);
  d["formula"] = r.formula ? to_fraction(*r.formula) : py::none();
  d["equal"] = r.equal;
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

std::vector<Frac> fracs(const std::vector<std::string>& items) {
  std::vector<Frac> out;
  for (const auto& s : items) out.push_back(Frac::parse(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite hypergeometric sums and point counts over finite fields";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "field_info",
      [](std::int64_t q) {
        const auto F = FieldTable::build(q);
        py::dict d;
        d["q"] = F.q();
        d["p"] = F.p();
        d["f"] = F.f();
        d["modulus"] = F.modulus();
        d["generator"] = F.generator();
        return d;
      },
      py::arg("q"), "Characteristic, degree, modulus and generator of F_q.");

  m.def(
      "h_over_q",
      [](const std::vector<std::int64_t>& p_list, const std::vector<std::int64_t>& q_list,
         std::int64_t q, Elem t) {
        const GaussTable T(FieldTable::build(q));
        return to_fraction(h_over_q(T, params_from_cyclotomic(p_list, q_list), t).value);
      },
      py::arg("p"), py::arg("q_list"), py::arg("field"), py::arg("t"),
      "H_q at t for parameters given by cyclotomic exponent lists.");

  m.def(
      "h_general",
      [](const std::vector<std::string>& alpha, const std::vector<std::string>& beta,
         std::int64_t q, Elem t) -> py::object {
        const GaussTable T(FieldTable::build(q));
        const auto value = h_general(T, HGParams::make(fracs(alpha), fracs(beta)), t).reduced();
        if (auto r = value.as_rational()) return to_fraction(*r);
        return py::module_::import("json").attr("loads")(value.to_json().dump());
      },
      py::arg("alpha"), py::arg("beta"), py::arg("field"), py::arg("t"),
      "H_q at t from the Gauss-sum definition; a cyclotomic JSON object when not rational.");

  m.def(
      "count",
      [](const std::vector<std::int64_t>& p_list, const std::vector<std::int64_t>& q_list,
         std::int64_t q, Elem lam, const std::string& what) {
        const GaussTable T(FieldTable::build(q));
        const VarietyCounter counter(T, params_from_cyclotomic(p_list, q_list));
        if (what == "torus") return to_dict(counter.torus_count(lam));
        if (what == "completed") return to_dict(counter.completed_count(lam));
        if (what == "main") return to_dict(counter.main_theorem_check(lam));
        throw Error(ErrorKind::BadParameter, "unknown count '" + what + "'");
      },
      py::arg("p"), py::arg("q_list"), py::arg("field"), py::arg("lam"),
      py::arg("what") = "completed", "Brute-force count against the closed formula.");

  m.def(
      "curve_count",
      [](const std::string& kind, std::int64_t q, Elem t) {
        const GaussTable T(FieldTable::build(q));
        return to_dict(curve_counts(T, curve_kind_from_string(kind), t));
      },
      py::arg("kind"), py::arg("field"), py::arg("t"),
      "Naive point count of a curve family member against its H_q expression.");

  m.def(
      "p_rs",
      [](int r, int s) {
        std::vector<py::int_> out;
        for (const auto& c : p_rs(r, s)) out.emplace_back(py::int_(py::str(c.get_str())));
        return out;
      },
      py::arg("r"), py::arg("s"), "Coefficients of P_rs(q), constant term first.");

  m.def(
      "run_suite",
      [](const std::string& name, const std::vector<std::int64_t>& fields, int jobs) {
        SuiteOptions options;
        options.fields = fields;
        options.jobs = jobs;
        std::vector<CountReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(name, options);
        }
        py::list out;
        for (const auto& r : reports) out.append(to_dict(r));
        return out;
      },
      py::arg("name"), py::arg("fields") = std::vector<std::int64_t>{}, py::arg("jobs") = 1,
      "Runs a named verification suite and returns its reports.");

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
