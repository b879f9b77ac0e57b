#include <pybind11/pybind11.h>

#include "periplectiq/driver.hpp"

namespace py = pybind11;
using namespace periplectiq;

namespace {

ComposeOrder order_of(const std::string& c) {
    if (c == "lr") return ComposeOrder::LeftToRight;
    if (c == "rl") return ComposeOrder::RightToLeft;
    throw py::value_error("convention must be 'rl' or 'lr'");
}

} // namespace

PYBIND11_MODULE(_periplectiq, m) {
    m.doc() = "exact computations in the quantized periplectic superalgebra: "
              "Q(q) arithmetic and the verification/report drivers";

    // scalar field helpers (string-rendered canonical forms)
    m.def("quantum_integer", [](int n) { return quantum_integer(n).str(); }, py::arg("m"));
    m.def("quantum_factorial", [](int n) { return quantum_factorial(n).str(); }, py::arg("m"));
    m.def("rat_add",
          [](const std::string& a, const std::string& b) {
              return (parse_ratfunc(a) + parse_ratfunc(b)).str();
          });
    m.def("rat_sub",
          [](const std::string& a, const std::string& b) {
              return (parse_ratfunc(a) - parse_ratfunc(b)).str();
          });
    m.def("rat_mul",
          [](const std::string& a, const std::string& b) {
              return (parse_ratfunc(a) * parse_ratfunc(b)).str();
          });
    m.def("rat_div",
          [](const std::string& a, const std::string& b) {
              return (parse_ratfunc(a) / parse_ratfunc(b)).str();
          });
    m.def("rat_neg", [](const std::string& a) { return (-parse_ratfunc(a)).str(); });
    m.def("rat_inv", [](const std::string& a) { return parse_ratfunc(a).inv().str(); });
    m.def("rat_subst_q_inverse",
          [](const std::string& a) { return parse_ratfunc(a).subst_q_inverse().str(); });
    m.def("eval_at_one", [](const std::string& a) {
        std::ostringstream os;
        os << eval_at_one(parse_ratfunc(a));
        return os.str();
    });

    // report drivers (JSON strings; parse on the python side)
    m.def(
        "relations_json",
        [](int n, int k, bool mutate) { return drive_relations(n, k, mutate).json; },
        py::arg("n"), py::arg("k"), py::arg("mutate") = false);
    m.def(
        "maximal_json",
        [](int n, int k, const std::string& convention, const std::string& tableau,
           const std::string& pattern) {
            return drive_maximal(n, k, order_of(convention), tableau, pattern).json;
        },
        py::arg("n"), py::arg("k"), py::arg("convention") = "rl", py::arg("tableau") = "",
        py::arg("pattern") = "");
    m.def(
        "decompose_json",
        [](int n, int k, const std::string& convention) {
            return drive_decompose(n, k, order_of(convention)).json;
        },
        py::arg("n"), py::arg("k"), py::arg("convention") = "rl");
    m.def(
        "character_json", [](int n, int k) { return drive_character(n, k).json; },
        py::arg("n"), py::arg("k"));
}
