#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rsl/symfunc.hpp"

namespace rsl {

namespace {

// Modified Macdonald polynomial by the filling-statistics formula, as
// monomial coordinates: coefficient of m_lambda is the q^inv t^maj weight
// sum over fillings of mu with content lambda.
//
// Diagram in French notation: row 0 is the bottom (longest) row. For a cell
// u, Des(u) means the entry exceeds the one directly below; maj adds
// leg(u)+1 over descents (leg = cells above u in its column); inv counts
// attacking inversions (same row, or consecutive rows with the upper cell
// strictly right of the lower) in top-to-bottom reading order, minus the
// arms of the descent cells.
std::map<Partition, QTPoly, PartLexDesc> htilde_monomial(const Partition& mu) {
    const int n = (int)part_size(mu);
    const int rows = (int)mu.size();
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    std::vector<std::vector<int>> at(rows);  // cell index by (row, col)
    for (int r = 0; r < rows; ++r) {
        at[r].resize(mu[r]);
        for (int c = 0; c < mu[r]; ++c) {
            at[r][c] = (int)cells.size();
            cells.push_back({r, c});
        }
    }
    std::vector<int> south(cells.size(), -1), legp1(cells.size()), arm(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
        auto [r, c] = cells[i];
        if (r > 0) south[i] = at[r - 1][c];
        int leg = 0;
        for (int r2 = r + 1; r2 < rows; ++r2)
            if (mu[r2] > c) ++leg;
        legp1[i] = leg + 1;
        arm[i] = mu[r] - 1 - c;
    }
    // attacking pairs (earlier, later) in reading order: rows top to bottom,
    // left to right within a row
    std::vector<std::pair<int, int>> attack;
    for (int r = 0; r < rows; ++r) {
        for (int c1 = 0; c1 < mu[r]; ++c1)
            for (int c2 = c1 + 1; c2 < mu[r]; ++c2) attack.push_back({at[r][c1], at[r][c2]});
        if (r > 0)
            for (int j = 0; j < mu[r]; ++j)
                for (int j2 = 0; j2 < j; ++j2) attack.push_back({at[r][j], at[r - 1][j2]});
    }
    std::map<Partition, QTPoly, PartLexDesc> out;
    std::vector<int> fill(cells.size());
    for (const Partition& lam : partitions_of(n)) {
        std::vector<int> entries;
        for (size_t i = 0; i < lam.size(); ++i)
            for (int k = 0; k < lam[i]; ++k) entries.push_back((int)i + 1);
        std::sort(entries.begin(), entries.end());
        QTPoly coeff;
        do {
            for (size_t i = 0; i < cells.size(); ++i) fill[i] = entries[i];
            int maj = 0, armsum = 0, invs = 0;
            for (size_t i = 0; i < cells.size(); ++i)
                if (south[i] >= 0 && fill[i] > fill[south[i]]) {
                    maj += legp1[i];
                    armsum += arm[i];
                }
            for (auto [u, v] : attack)
                if (fill[u] > fill[v]) ++invs;
            int inv = invs - armsum;
            if (inv < 0) throw Error("htilde fillings: negative inv statistic");
            coeff.add_term({inv, maj}, 1);
        } while (std::next_permutation(entries.begin(), entries.end()));
        if (!coeff.is_zero()) out.emplace(lam, std::move(coeff));
    }
    return out;
}

// predicted star-product norm factors of H~_mu:
// prod_cells (q^{arm+1} - t^{leg}) (t^{leg+1} - q^{arm})
std::vector<QTPoly> star_norm_prediction(const Partition& mu) {
    std::vector<QTPoly> factors;
    for (int r = 0; r < (int)mu.size(); ++r)
        for (int c = 0; c < mu[r]; ++c) {
            int arm = mu[r] - 1 - c;
            int leg = 0;
            for (size_t r2 = r + 1; r2 < mu.size(); ++r2)
                if (mu[r2] > c) ++leg;
            factors.push_back(QTPoly::monomial(1, arm + 1, 0) - QTPoly::monomial(1, 0, leg));
            factors.push_back(QTPoly::monomial(1, 0, leg + 1) - QTPoly::monomial(1, arm, 0));
        }
    return factors;
}

nlohmann::json poly_to_json(const QTPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) arr.push_back({{"q", m.q}, {"t", m.t}, {"c", c.get_str()}});
    return arr;
}

QTPoly poly_from_json(const nlohmann::json& arr) {
    QTPoly p;
    for (auto& term : arr)
        p.add_term({term.at("q").get<int>(), term.at("t").get<int>()},
                   Int(term.at("c").get<std::string>()));
    return p;
}

}  // namespace

void SymEngine::ensure_macdonald(int n) {
    DegreeTables& t = tables(n);
    if (t.macdonald_ready) return;

    bool loaded = false;
    std::string cache_file;
    if (!cache_dir_.empty()) {
        cache_file = cache_dir_ + "/htilde_deg" + std::to_string(n) + ".json";
        std::ifstream in(cache_file);
        if (in) {
            try {
                nlohmann::json j;
                in >> j;
                for (auto& entry : j.at("tables")) {
                    Partition mu = entry.at("mu").get<Partition>();
                    std::map<Partition, QTPoly, PartLexDesc> scoords;
                    for (auto& sc : entry.at("schur")) {
                        Partition lam = sc.at("lambda").get<Partition>();
                        scoords.emplace(lam, poly_from_json(sc.at("poly")));
                    }
                    t.htilde_s.emplace(mu, std::move(scoords));
                }
                loaded = (t.htilde_s.size() == t.parts.size());
            } catch (...) {
                t.htilde_s.clear();
                loaded = false;
            }
        }
    }

    if (!loaded) {
        t.htilde_s.clear();
        for (const Partition& mu : t.parts) {
            // m-coordinates -> Schur coordinates via the inverse Kostka matrix
            auto mcoords = htilde_monomial(mu);
            std::map<Partition, QTPoly, PartLexDesc> scoords;
            const int N = (int)t.parts.size();
            // u_i = sum_{j <= i} (K^{-1})[j][i] v_j
            for (int i = 0; i < N; ++i) {
                QTPoly acc;
                for (int j = 0; j <= i; ++j) {
                    auto it = mcoords.find(t.parts[j]);
                    if (it == mcoords.end() || t.kostka_inv[j][i] == 0) continue;
                    acc += it->second * t.kostka_inv[j][i];
                }
                if (!acc.is_zero()) scoords.emplace(t.parts[i], std::move(acc));
            }
            t.htilde_s.emplace(mu, std::move(scoords));
        }
        if (!cache_file.empty()) {
            nlohmann::json j;
            j["degree"] = n;
            j["tables"] = nlohmann::json::array();
            for (auto& [mu, scoords] : t.htilde_s) {
                nlohmann::json entry;
                entry["mu"] = mu;
                entry["schur"] = nlohmann::json::array();
                for (auto& [lam, poly] : scoords)
                    entry["schur"].push_back({{"lambda", lam}, {"poly", poly_to_json(poly)}});
                j["tables"].push_back(std::move(entry));
            }
            std::ofstream out(cache_file);
            if (out) out << j.dump();
        }
    }

    // p-coordinates
    for (auto& [mu, scoords] : t.htilde_s) {
        FracMap pc;
        for (auto& [lam, poly] : scoords) {
            for (auto& [nu, r] : s_to_p(n, lam)) {
                QTFraction add = QTFraction(poly) * QTFraction(r);
                auto [it, inserted] = pc.emplace(nu, add);
                if (!inserted) {
                    it->second += add;
                    if (it->second.is_zero()) pc.erase(it);
                }
            }
        }
        t.htilde_p.emplace(mu, std::move(pc));
    }

    // star-product orthogonality and norms; this also validates cached data
    for (const Partition& mu : t.parts) {
        std::vector<QTPoly> factors = star_norm_prediction(mu);
        QTPoly predicted(1);
        for (auto& f : factors) predicted *= f;
        QTFraction norm = star_pairing(n, t.htilde_p.at(mu), t.htilde_p.at(mu));
        auto np = norm.to_poly();
        if (!np || !(*np == predicted))
            throw Error("macdonald tables: star norm mismatch at mu=" + partition_str(mu));
        t.star_norm_factors.emplace(mu, std::move(factors));
    }
    // off-diagonal orthogonality at exact integer points: the coordinate
    // extraction is certified symbolically by the round-trip tests; this
    // guards against corrupted cache data at a fraction of the cost
    for (auto [qv, tv] : {std::pair<long, long>{2, 3}, {5, 7}}) {
        std::map<Partition, std::map<Partition, mpq_class, PartLexDesc>> evals;
        for (auto& [mu, pc] : t.htilde_p) {
            auto& slot = evals[mu];
            for (auto& [nu, fr] : pc) {
                mpq_class v(fr.num().eval_at(Int(qv), Int(tv)));
                v /= mpq_class(fr.den_scalar());
                if (!fr.den_factors().empty())
                    throw Error("macdonald tables: unexpected denominator factor");
                slot.emplace(nu, v);
            }
        }
        std::vector<mpq_class> twist(t.parts.size());
        for (size_t v = 0; v < t.parts.size(); ++v) {
            const Partition& nu = t.parts[v];
            mpq_class tw(t.z[v]);
            for (int rr : nu) {
                Int qp, tp;
                mpz_pow_ui(qp.get_mpz_t(), Int(qv).get_mpz_t(), rr);
                mpz_pow_ui(tp.get_mpz_t(), Int(tv).get_mpz_t(), rr);
                tw *= mpq_class((1 - qp) * (1 - tp));
            }
            if ((n - (int)nu.size()) % 2 == 1) tw = -tw;
            twist[v] = tw;
        }
        for (size_t i = 0; i < t.parts.size(); ++i)
            for (size_t j = i + 1; j < t.parts.size(); ++j) {
                const auto& a = evals.at(t.parts[i]);
                const auto& b = evals.at(t.parts[j]);
                mpq_class total(0);
                for (auto& [nu, av] : a) {
                    auto it = b.find(nu);
                    if (it == b.end()) continue;
                    total += av * it->second * twist[t.index.at(nu)];
                }
                if (total != 0)
                    throw Error("macdonald tables: star orthogonality failed at " +
                                partition_str(t.parts[i]) + "," + partition_str(t.parts[j]));
            }
    }
    t.macdonald_ready = true;
}

SymFunc SymEngine::htilde(const Partition& mu) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (!is_partition(mu)) throw InvalidArgument("htilde: not a partition");
    int n = (int)part_size(mu);
    check_degree(n);
    ensure_macdonald(n);
    DegreeTables& t = tables(n);
    SymFunc f(Basis::Schur);
    for (auto& [lam, poly] : t.htilde_s.at(mu)) f.add_term(lam, QTFraction(poly));
    return f;
}

}  // namespace rsl
