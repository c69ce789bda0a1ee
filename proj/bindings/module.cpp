#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "fibquart/closed_form.hpp"
#include "fibquart/errors.hpp"
#include "fibquart/identities.hpp"
#include "fibquart/kernel.hpp"
#include "fibquart/oracle.hpp"
#include "fibquart/verify.hpp"

namespace py = pybind11;

namespace {

using fibquart::ExactInt;
using fibquart::Index;

// ExactInt -> arbitrary-precision Python int, via the exact decimal string.
py::object to_py_int(const ExactInt& value) {
  PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::dict report_to_dict(const fibquart::VerifyReport& report) {
  py::list mismatches;
  for (const auto& m : report.mismatches) {
    py::dict entry;
    entry["case"] = m.label;
    entry["args"] = m.args;
    entry["closed"] = m.closed;
    entry["oracle"] = m.oracle;
    mismatches.append(entry);
  }
  py::list failures;
  for (const auto& f : report.divisibility_failures) {
    py::dict entry;
    entry["site"] = f.site;
    entry["case"] = f.label;
    entry["args"] = f.args;
    failures.append(entry);
  }
  py::dict out;
  out["cases_run"] = report.cases_run;
  out["mismatches"] = mismatches;
  out["divisibility_failures"] = failures;
  out["elapsed_ms"] = report.elapsed_ms;
  out["success"] = report.success();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact fourth-power sums of Fibonacci and Lucas numbers";
  m.attr("__version__") = "0.1.0";

  py::register_exception<fibquart::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<fibquart::internal_error>(m, "InternalError",
                                                   PyExc_ArithmeticError);

  py::enum_<fibquart::SumFamily>(m, "SumFamily")
      .value("FibFourth", fibquart::SumFamily::FibFourth)
      .value("LucasFourth", fibquart::SumFamily::LucasFourth)
      .value("AltFibFourth", fibquart::SumFamily::AltFibFourth)
      .value("AltLucasFourth", fibquart::SumFamily::AltLucasFourth);

  py::enum_<fibquart::IdentityId>(m, "IdentityId")
      .value("FibAddSub", fibquart::IdentityId::FibAddSub)
      .value("LucasAddAdd", fibquart::IdentityId::LucasAddAdd)
      .value("LucasAddSub5F", fibquart::IdentityId::LucasAddSub5F)
      .value("FibSquare", fibquart::IdentityId::FibSquare)
      .value("LucasSquare", fibquart::IdentityId::LucasSquare)
      .value("FibDouble", fibquart::IdentityId::FibDouble)
      .value("FibFourthExpansion", fibquart::IdentityId::FibFourthExpansion)
      .value("LucasFourthExpansion", fibquart::IdentityId::LucasFourthExpansion)
      .value("LucasProductShift", fibquart::IdentityId::LucasProductShift);

  py::class_<fibquart::IdentityInstance>(m, "IdentityInstance")
      .def_readonly("id", &fibquart::IdentityInstance::id)
      .def_readonly("args", &fibquart::IdentityInstance::args)
      .def_property_readonly(
          "lhs", [](const fibquart::IdentityInstance& i) { return to_py_int(i.lhs); })
      .def_property_readonly(
          "rhs", [](const fibquart::IdentityInstance& i) { return to_py_int(i.rhs); })
      .def_property_readonly(
          "holds", [](const fibquart::IdentityInstance& i) { return i.holds(); })
      .def("__repr__", [](const fibquart::IdentityInstance& i) {
        std::string args;
        for (std::size_t k = 0; k < i.args.size(); ++k) {
          args += (k ? ", " : "") + std::to_string(i.args[k]);
        }
        return "IdentityInstance(" + std::string(fibquart::identity_name(i.id)) +
               "(" + args + "): lhs=" + i.lhs.str() + ", rhs=" + i.rhs.str() + ")";
      });

  m.def(
      "fib", [](Index n) { return to_py_int(fibquart::fib(n)); }, py::arg("n"),
      "F_n for any signed n.");
  m.def(
      "lucas", [](Index n) { return to_py_int(fibquart::lucas(n)); }, py::arg("n"),
      "L_n for any signed n.");
  m.def(
      "fib_lucas",
      [](Index n) {
        auto [f, l] = fibquart::fib_lucas(n);
        return py::make_tuple(to_py_int(f), to_py_int(l));
      },
      py::arg("n"), "(F_n, L_n) from a single doubling chain.");

  m.def(
      "fib_fourth_sum",
      [](Index m_, Index n) { return to_py_int(fibquart::fib_fourth_sum(m_, n)); },
      py::arg("m"), py::arg("n"),
      "Sum of F_{mk}^4 for k = 1..n, in closed form. Requires m != 0, n >= 0.");
  m.def(
      "lucas_fourth_sum",
      [](Index m_, Index n) { return to_py_int(fibquart::lucas_fourth_sum(m_, n)); },
      py::arg("m"), py::arg("n"),
      "Sum of L_{mk}^4 for k = 1..n, in closed form. Requires m != 0, n >= 0.");
  m.def(
      "alt_fib_fourth_sum",
      [](Index m_, Index n) { return to_py_int(fibquart::alt_fib_fourth_sum(m_, n)); },
      py::arg("m"), py::arg("n"),
      "Alternating sum of (-1)^{k-1} F_{mk}^4 for k = 1..n, in closed form.");
  m.def(
      "alt_lucas_fourth_sum",
      [](Index m_, Index n) {
        return to_py_int(fibquart::alt_lucas_fourth_sum(m_, n));
      },
      py::arg("m"), py::arg("n"),
      "Alternating sum of (-1)^{k-1} L_{mk}^4 with the parity-dependent lower "
      "limit (k starts at 0 for odd n).");
  m.def(
      "fourth_sum_m1",
      [](fibquart::SumFamily family, Index n) {
        return to_py_int(fibquart::fourth_sum_m1(family, n));
      },
      py::arg("family"), py::arg("n"), "The factored m = 1 form of a family sum.");
  m.def(
      "lucas_even_sum_sign_mk",
      [](Index m_, Index n) {
        return to_py_int(fibquart::lucas_even_sum_sign_mk(m_, n));
      },
      py::arg("m"), py::arg("n"),
      "Sum of (-1)^{mk-1} L_{2mk} for k = 1..n, in collapsed form.");
  m.def(
      "lucas_even_sum_sign_km",
      [](Index m_, Index n) {
        return to_py_int(fibquart::lucas_even_sum_sign_km(m_, n));
      },
      py::arg("m"), py::arg("n"),
      "Sum of (-1)^{k(m-1)} L_{2mk} for k = 1..n, in collapsed form.");

  m.def(
      "naive_power_sum",
      [](fibquart::SumFamily family, Index m_, Index n) {
        return to_py_int(fibquart::naive_power_sum(family, m_, n));
      },
      py::arg("family"), py::arg("m"), py::arg("n"),
      "Ground truth by direct summation, O(n) big-integer operations.");
  m.def(
      "convention_sum",
      [](fibquart::SumFamily family, Index m_, Index n) {
        return to_py_int(fibquart::convention_sum(family, m_, n));
      },
      py::arg("family"), py::arg("m"), py::arg("n"),
      "The family sum extended to negative n by the reversed-sum convention.");

  m.def(
      "eval_identity",
      [](fibquart::IdentityId id, const std::vector<Index>& args) {
        return fibquart::eval_identity(id, args);
      },
      py::arg("id"), py::arg("args"),
      "Evaluates both sides of an identity exactly.");

  m.def(
      "run_grid",
      [](std::optional<std::vector<fibquart::SumFamily>> families, Index m_min,
         Index m_max, Index n_max, bool with_identities, Index identity_bound) {
        fibquart::GridSpec spec;
        if (families) spec.families = std::move(*families);
        spec.m_min = m_min;
        spec.m_max = m_max;
        spec.n_max = n_max;
        spec.include_identities = with_identities;
        spec.identity_min = -identity_bound;
        spec.identity_max = identity_bound;
        return report_to_dict(fibquart::run_grid(spec));
      },
      py::arg("families") = py::none(), py::arg("m_min") = -6, py::arg("m_max") = 6,
      py::arg("n_max") = 12, py::arg("with_identities") = false,
      py::arg("identity_bound") = 30,
      "Closed-form vs oracle grid plus optional identity sweep; returns the "
      "report as a dict with big integers as decimal strings.");
}
