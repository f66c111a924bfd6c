#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rsl/bijections.hpp"
#include "rsl/expr.hpp"
#include "rsl/render.hpp"
#include "rsl/schur_expand.hpp"
#include "rsl/symfunc.hpp"
#include "rsl/verify.hpp"

namespace py = pybind11;
using namespace rsl;

namespace {

SymEngine& engine() {
    static SymEngine e(12);
    return e;
}

std::string hikita_json(int m, int n, int jobs) {
    return expansion_json(hikita(GridShape(m, n), jobs), true).dump();
}

std::string qop_json(int m, int n) {
    auto& E = engine();
    return expansion_json(E.to_schur_expansion(E.q_op_one(m, n), m, n), true).dump();
}

bool compare_sides(int m, int n) {
    auto& E = engine();
    return hikita(GridShape(m, n)).coeffs ==
           E.to_schur_expansion(E.q_op_one(m, n), m, n).coeffs;
}

std::string check_json(const std::string& name, int bound) {
    return report_json(verify(name, bound, engine())).dump();
}

std::string nabla_json(const std::string& expr, bool inverse) {
    auto& E = engine();
    SymFunc f = E.nabla(parse_symfunc(expr, E), inverse);
    return expansion_json(E.to_schur_expansion(f), false).dump();
}

std::string pair_str(const std::string& a, const std::string& b) {
    auto& E = engine();
    return E.hall_pairing(parse_symfunc(a, E), parse_symfunc(b, E)).str();
}

std::string table_json(const std::string& family, int kmax) {
    return family_table_json(family, kmax).dump();
}

std::vector<std::vector<int>> paths_list(int m, int n) {
    std::vector<std::vector<int>> out;
    for_each_path(GridShape(m, n), [&](const DyckPath& p) { out.push_back(p.col); });
    return out;
}

py::dict pf_stats(int m, int n, std::vector<int> col, std::vector<int> labels) {
    ParkingFunction pf(DyckPath(GridShape(m, n), std::move(col)), std::move(labels));
    PFWeight w = pf_weight(pf);
    py::dict d;
    d["ret"] = w.ret;
    d["area"] = w.area;
    d["dinv"] = w.dinv;
    d["tdinv"] = tdinv(pf);
    d["word"] = word(pf);
    d["pides"] = w.pides;
    return d;
}

long count_pf(int m, int n) {
    long c = 0;
    for_each_pf(GridShape(m, n), [&](const ParkingFunction&) { ++c; });
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact rational shuffle computations (C++ core)";
    m.def("hikita_json", &hikita_json, py::arg("m"), py::arg("n"), py::arg("jobs") = 1,
          "Schur expansion of the Hikita polynomial as JSON");
    m.def("qop_json", &qop_json, py::arg("m"), py::arg("n"),
          "Schur expansion of Q_{m,n}(1) as JSON");
    m.def("compare", &compare_sides, py::arg("m"), py::arg("n"),
          "combinatorial and operator expansions agree");
    m.def("check_json", &check_json, py::arg("name"), py::arg("bound") = 8,
          "run a verifier, JSON report");
    m.def("verifier_names", [] { return verifier_names(); });
    m.def("nabla_json", &nabla_json, py::arg("expr"), py::arg("inverse") = false,
          "apply nabla to an expression, Schur expansion as JSON");
    m.def("pair", &pair_str, py::arg("expr1"), py::arg("expr2"), "Hall scalar product");
    m.def("table_json", &table_json, py::arg("family") = "3k+1", py::arg("kmax") = 4);
    m.def("paths", &paths_list, py::arg("m"), py::arg("n"),
          "column arrays of all (m,n)-Dyck paths");
    m.def("count_parking_functions", &count_pf, py::arg("m"), py::arg("n"));
    m.def("pf_stats", &pf_stats, py::arg("m"), py::arg("n"), py::arg("col"), py::arg("labels"),
          "statistics bundle of one parking function");
}
