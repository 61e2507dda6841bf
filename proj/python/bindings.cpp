#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adsfam/asymptotics.hpp"
#include "adsfam/families.hpp"
#include "adsfam/suites.hpp"

namespace py = pybind11;
using namespace adsfam;

PYBIND11_MODULE(_adsfam, m) {
    m.doc() = "Symbolic families of equivariant differential operators for "
              "the pair o(2,n) > o(2,n-1)";

    m.def(
        "coefficients",
        [](int n, int order) {
            FamilyCoefficients fc = compute_coefficients(n, order);
            std::vector<std::string> out;
            out.reserve(fc.coeff.size());
            for (const auto& c : fc.coeff) out.push_back(c.str());
            return out;
        },
        py::arg("n"), py::arg("order"),
        "Coefficients a_0..a_N of the order-`order` family as strings in L");

    m.def(
        "family",
        [](int n, int order) {
            LieContext big(n + 1);
            return build_family(big, compute_coefficients(n, order)).str();
        },
        py::arg("n"), py::arg("order"),
        "The operator as a word expansion in the lowering generators");

    m.def(
        "asymptotic_coefficients",
        [](int n, int jmax) {
            std::vector<std::string> out;
            for (const auto& a : derive_recursion_oracle(n, jmax).A)
                out.push_back(a.str());
            return out;
        },
        py::arg("n"), py::arg("jmax"),
        "Boundary expansion coefficients A_0, A_2, ..., A_{2 jmax} as strings");

    m.def(
        "coincidence_constant",
        [](int n, int order) {
            auto r = verify_coincidence(n, order);
            if (!r.proportional)
                throw std::runtime_error("families are not proportional");
            return r.constant.str();
        },
        py::arg("n"), py::arg("order"),
        "Proportionality constant between the residue and recursion families");

    m.def("suite_names", [] { return suite_names(); });

    m.def(
        "run_suite",
        [](const std::string& suite, int n, int degree) {
            Report rep = run_suite(suite, n, degree);
            py::module_ json = py::module_::import("json");
            return json.attr("loads")(rep.to_json(false).dump());
        },
        py::arg("suite"), py::arg("n"), py::arg("degree") = 0,
        "Runs one verification suite and returns the report as a dict");
}
