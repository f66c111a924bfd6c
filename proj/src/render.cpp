#include "rsl/render.hpp"

#include <sstream>

namespace rsl {

nlohmann::json poly_json(const QTPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) arr.push_back({{"q", m.q}, {"t", m.t}, {"c", c.get_str()}});
    return arr;
}

nlohmann::json path_json(const DyckPath& p) {
    return {{"m", p.shape.m}, {"n", p.shape.n}, {"col", p.col}};
}

nlohmann::json pf_json(const ParkingFunction& pf) {
    return {{"m", pf.path.shape.m},
            {"n", pf.path.shape.n},
            {"col", pf.path.col},
            {"labels", pf.labels}};
}

nlohmann::json expansion_json(const SchurExpansion& e, bool with_qt_schur) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& [lam, poly] : e.coeffs) {
        nlohmann::json entry = {{"partition", lam}, {"poly", poly_json(poly)}};
        if (with_qt_schur) {
            nlohmann::json dec = nlohmann::json::array();
            for (auto& [tr, mult] : decompose_qt_schur(poly)) {
                nlohmann::json part = nlohmann::json::array();
                if (tr.a > 0) part.push_back(tr.a);
                if (tr.b > 0) part.push_back(tr.b);
                dec.push_back({{"partition", part}, {"mult", mult}});
            }
            entry["qt_schur"] = dec;
        }
        coeffs.push_back(std::move(entry));
    }
    return {{"schema", "rsl-v1"}, {"m", e.m}, {"n", e.n}, {"coeffs", coeffs}};
}

nlohmann::json report_json(const VerifyReport& r) {
    return {{"schema", "rsl-v1"},
            {"name", r.name},
            {"conjecture", r.conjecture},
            {"instances", r.instances},
            {"passed", r.passed},
            {"failed", r.failed},
            {"counterexamples", r.counterexamples}};
}

std::string two_row_str(const TwoRow& tr) {
    std::ostringstream os;
    os << "s~(";
    if (tr.a > 0) {
        os << tr.a;
        if (tr.b > 0) os << "," << tr.b;
    }
    os << ")";
    return os.str();
}

std::string two_row_latex(const TwoRow& tr) {
    std::ostringstream os;
    os << "s^{qt}_{(";
    if (tr.a > 0) {
        os << tr.a;
        if (tr.b > 0) os << "," << tr.b;
    } else {
        os << "\\emptyset";
    }
    os << ")}";
    return os.str();
}

std::string decomposition_str(const std::vector<std::pair<TwoRow, long>>& dec) {
    if (dec.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [tr, mult] : dec) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult << "*";
        os << two_row_str(tr);
    }
    return os.str();
}

std::string expansion_text(const SchurExpansion& e) {
    std::ostringstream os;
    for (auto& [lam, poly] : e.coeffs)
        os << "s[" << partition_str(lam) << "]: " << poly.str() << "\n";
    return os.str();
}

std::string expansion_csv(const SchurExpansion& e) {
    std::ostringstream os;
    os << "m,n,partition,qexp,texp,coeff\n";
    for (auto& [lam, poly] : e.coeffs) {
        std::string ps = partition_str(lam);
        for (auto& c : ps)
            if (c == ',') c = ' ';
        for (auto& [mono, c] : poly.terms())
            os << e.m << "," << e.n << "," << ps << "," << mono.q << "," << mono.t << ","
               << c.get_str() << "\n";
    }
    return os.str();
}

std::string expansion_latex(const SchurExpansion& e) {
    std::ostringstream os;
    os << "\\mathrm{Q}_{" << e.m << "," << e.n << "}(1) = ";
    bool first = true;
    for (auto& [lam, poly] : e.coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(";
        bool f2 = true;
        for (auto& [tr, mult] : decompose_qt_schur(poly)) {
            if (!f2) os << "+";
            f2 = false;
            if (mult != 1) os << mult;
            os << two_row_latex(tr);
        }
        if (f2) os << "0";
        os << "\\right) s_{" << partition_str(lam) << "}";
    }
    os << "\n";
    return os.str();
}

namespace {
int family_m(const std::string& family, int k) {
    if (family == "3k") return 3 * k;
    if (family == "3k+1") return 3 * k + 1;
    if (family == "3k+2") return 3 * k + 2;
    throw InvalidArgument("unknown family: " + family + " (use 3k, 3k+1, 3k+2)");
}
}  // namespace

std::string family_table_latex(const std::string& family, int kmax) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|c|c|c|}\n\\hline\n";
    os << "$k$ & $\\mathrm{Q}_{" << family
       << ",3}(1)$ & $[s_{3}]$ & $[s_{21}]$ & $[s_{111}]$ \\\\\n\\hline\n";
    for (int k = 0; k <= kmax; ++k) {
        int m = family_m(family, k);
        if (m < 1) continue;
        auto table = qt_schur_table(GridShape(m, 3));
        os << "$" << k << "$ & $\\mathrm{Q}_{" << m << ",3}(1)$";
        for (const Partition& lam : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}) {
            os << " & $";
            auto it = table.find(lam);
            if (it == table.end() || it->second.empty()) {
                os << "0";
            } else {
                bool first = true;
                for (auto& [tr, mult] : it->second) {
                    if (!first) os << "+";
                    first = false;
                    if (mult != 1) os << mult;
                    os << two_row_latex(tr);
                }
            }
            os << "$";
        }
        os << " \\\\\n\\hline\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

nlohmann::json family_table_json(const std::string& family, int kmax) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 0; k <= kmax; ++k) {
        int m = family_m(family, k);
        if (m < 1) continue;
        auto table = qt_schur_table(GridShape(m, 3));
        nlohmann::json row = {{"k", k}, {"m", m}};
        nlohmann::json cols = nlohmann::json::object();
        for (auto& [lam, dec] : table) {
            nlohmann::json d = nlohmann::json::array();
            for (auto& [tr, mult] : dec) {
                nlohmann::json part = nlohmann::json::array();
                if (tr.a > 0) part.push_back(tr.a);
                if (tr.b > 0) part.push_back(tr.b);
                d.push_back({{"partition", part}, {"mult", mult}});
            }
            cols[partition_str(lam)] = d;
        }
        row["coeffs"] = cols;
        rows.push_back(std::move(row));
    }
    return {{"schema", "rsl-v1"}, {"family", family}, {"rows", rows}};
}

std::string report_text(const VerifyReport& r) {
    std::ostringstream os;
    os << r.name << (r.conjecture ? " [conjecture]" : " [theorem]") << ": " << r.passed << "/"
       << r.instances << " instances passed";
    if (r.failed) {
        os << ", " << r.failed << " FAILED";
        for (auto& c : r.counterexamples) os << "\n  counterexample: " << c;
    }
    os << "\n";
    return os.str();
}

}  // namespace rsl
