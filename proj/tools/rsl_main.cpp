#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rsl/bijections.hpp"
#include "rsl/expr.hpp"
#include "rsl/render.hpp"
#include "rsl/schur_expand.hpp"
#include "rsl/symfunc.hpp"
#include "rsl/verify.hpp"

using namespace rsl;

namespace {

void print_expansion(const SchurExpansion& e, const std::string& format) {
    if (format == "json") {
        std::cout << expansion_json(e, true).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << expansion_csv(e);
    } else if (format == "latex") {
        std::cout << expansion_latex(e);
    } else {
        std::cout << expansion_text(e);
    }
}

void print_symfunc_schur(SymEngine& engine, const SymFunc& f, const std::string& format) {
    SymFunc s = engine.convert(f, Basis::Schur);
    bool polynomial = true;
    for (auto& [lam, c] : s.terms)
        if (!c.is_polynomial()) polynomial = false;
    if (!polynomial) {
        // fractional coefficients can appear for general inputs
        std::cout << s.str() << "\n";
        return;
    }
    print_expansion(engine.to_schur_expansion(s), format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations around the extended rational shuffle theorem"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    int jobs = 1;
    int degree_bound = 8;
    app.add_option("--format", format, "output format: text, json, csv, latex")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for enumeration")->capture_default_str();
    app.add_option("--degree-bound", degree_bound, "degree bound of the operator engine")
        ->capture_default_str();

    int m = 1, n = 1, kmax = 4, max_bound = 8;
    std::string name, expr1, expr2, family = "3k+1";
    bool inverse = false;

    auto* cmd_paths = app.add_subcommand("enum-paths", "list all (m,n)-Dyck paths");
    cmd_paths->add_option("m", m, "width")->required();
    cmd_paths->add_option("n", n, "height")->required();

    auto* cmd_pf = app.add_subcommand("enum-pf", "list all (m,n)-parking functions");
    cmd_pf->add_option("m", m, "width")->required();
    cmd_pf->add_option("n", n, "height")->required();

    auto* cmd_hikita = app.add_subcommand("hikita", "Schur expansion of the Hikita polynomial");
    cmd_hikita->add_option("m", m, "width")->required();
    cmd_hikita->add_option("n", n, "height")->required();

    auto* cmd_qop = app.add_subcommand("qop", "Schur expansion of Q_{m,n}(1)");
    cmd_qop->add_option("m", m, "width")->required();
    cmd_qop->add_option("n", n, "height")->required();

    auto* cmd_compare =
        app.add_subcommand("compare", "diff the combinatorial and operator expansions");
    cmd_compare->add_option("m", m, "width")->required();
    cmd_compare->add_option("n", n, "height")->required();

    auto* cmd_nabla = app.add_subcommand("nabla", "apply the nabla operator to an expression");
    cmd_nabla->add_option("expr", expr1, "symmetric function expression, e.g. e[3]")->required();
    cmd_nabla->add_flag("--inverse", inverse, "apply the inverse operator");

    auto* cmd_pair = app.add_subcommand("pair", "Hall scalar product of two expressions");
    cmd_pair->add_option("expr1", expr1, "first expression")->required();
    cmd_pair->add_option("expr2", expr2, "second expression")->required();

    auto* cmd_check = app.add_subcommand("check", "run a theorem or conjecture verifier");
    cmd_check->add_option("name", name, "verifier name")->required();
    cmd_check->add_option("--max", max_bound, "instance bound")->capture_default_str();

    auto* cmd_table =
        app.add_subcommand("table", "(q,t)-Schur coefficient table of a Q_{m,3} family");
    cmd_table->add_option("--family", family, "3k, 3k+1 or 3k+2")->capture_default_str();
    cmd_table->add_option("--kmax", kmax, "largest k")->capture_default_str();

    auto* cmd_list = app.add_subcommand("list-checks", "list verifier names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        SymEngine engine(degree_bound);

        if (cmd_paths->parsed()) {
            GridShape shape(m, n);
            for_each_path(shape, [&](const DyckPath& p) {
                if (format == "json") std::cout << path_json(p).dump() << "\n";
                else std::cout << partition_str(p.coarea()) << "\n";
            });
            return 0;
        }
        if (cmd_pf->parsed()) {
            GridShape shape(m, n);
            for_each_pf(shape, [&](const ParkingFunction& pf) {
                if (format == "json") {
                    std::cout << pf_json(pf).dump() << "\n";
                } else {
                    PFWeight w = pf_weight(pf);
                    std::cout << "cells";
                    for (int y = 0; y < pf.cars(); ++y)
                        std::cout << " (" << pf.path.col[y] << "," << y << ")=" << pf.labels[y];
                    std::cout << "  ret=" << w.ret << " area=" << w.area << " dinv=" << w.dinv
                              << " pides=" << partition_str(w.pides) << "\n";
                }
            });
            return 0;
        }
        if (cmd_hikita->parsed()) {
            print_expansion(hikita(GridShape(m, n), jobs), format);
            return 0;
        }
        if (cmd_qop->parsed()) {
            print_expansion(engine.to_schur_expansion(engine.q_op_one(m, n), m, n), format);
            return 0;
        }
        if (cmd_compare->parsed()) {
            SchurExpansion comb = hikita(GridShape(m, n), jobs);
            SchurExpansion alg = engine.to_schur_expansion(engine.q_op_one(m, n), m, n);
            if (comb.coeffs == alg.coeffs) {
                std::cout << "hikita(" << m << "," << n << ") == Q_{" << m << "," << n
                          << "}(1)\n";
                print_expansion(comb, format);
                return 0;
            }
            std::cout << "MISMATCH\n--- combinatorial ---\n"
                      << expansion_text(comb) << "--- operator ---\n"
                      << expansion_text(alg);
            return 1;
        }
        if (cmd_nabla->parsed()) {
            SymFunc f = parse_symfunc(expr1, engine);
            print_symfunc_schur(engine, engine.nabla(f, inverse), format);
            return 0;
        }
        if (cmd_pair->parsed()) {
            SymFunc f = parse_symfunc(expr1, engine);
            SymFunc g = parse_symfunc(expr2, engine);
            std::cout << engine.hall_pairing(f, g).str() << "\n";
            return 0;
        }
        if (cmd_check->parsed()) {
            VerifyReport r = verify(name, max_bound, engine);
            if (format == "json") std::cout << report_json(r).dump(2) << "\n";
            else std::cout << report_text(r);
            return (r.conjecture || r.ok()) ? 0 : 1;
        }
        if (cmd_table->parsed()) {
            if (format == "json") std::cout << family_table_json(family, kmax).dump(2) << "\n";
            else std::cout << family_table_latex(family, kmax);
            return 0;
        }
        if (cmd_list->parsed()) {
            for (auto& v : verifier_names())
                std::cout << v << (verifier_is_conjecture(v) ? " (conjecture)" : "") << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
