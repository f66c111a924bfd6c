#include "rsl/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rsl {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::Monomial: return 'm';
        case Basis::Elementary: return 'e';
        case Basis::Homogeneous: return 'h';
        case Basis::Power: return 'p';
        case Basis::Schur: return 's';
        case Basis::Macdonald: return 'H';
    }
    return '?';
}

Basis basis_from_letter(char c) {
    switch (c) {
        case 'm': return Basis::Monomial;
        case 'e': return Basis::Elementary;
        case 'h': return Basis::Homogeneous;
        case 'p': return Basis::Power;
        case 's': return Basis::Schur;
        case 'H': return Basis::Macdonald;
    }
    throw InvalidArgument(std::string("unknown basis letter: ") + c);
}

void SymFunc::add_term(const Partition& p, const QTFraction& c) {
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis != o.basis && !o.is_zero() && !is_zero())
        throw InvalidArgument("SymFunc: adding different bases");
    if (is_zero()) basis = o.basis;
    for (auto& [p, c] : o.terms) add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis != o.basis && !o.is_zero() && !is_zero())
        throw InvalidArgument("SymFunc: subtracting different bases");
    if (is_zero()) basis = o.basis;
    for (auto& [p, c] : o.terms) add_term(p, -c);
    return *this;
}

SymFunc& SymFunc::scale(const QTFraction& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    std::map<Partition, QTFraction, PartLexDesc> out;
    for (auto& [p, v] : terms) {
        QTFraction w = v * c;
        if (!w.is_zero()) out.emplace(p, std::move(w));
    }
    terms = std::move(out);
    return *this;
}

std::vector<int> SymFunc::degrees() const {
    std::vector<int> d;
    for (auto& [p, c] : terms) {
        int s = (int)part_size(p);
        if (std::find(d.begin(), d.end(), s) == d.end()) d.push_back(s);
    }
    std::sort(d.begin(), d.end());
    return d;
}

int SymFunc::max_degree() const {
    int mx = 0;
    for (auto& [p, c] : terms) mx = std::max(mx, (int)part_size(p));
    return mx;
}

std::string SymFunc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << basis_letter(basis) << "[" << partition_str(p) << "]";
    }
    return os.str();
}

SymFunc SymFunc::one() {
    SymFunc f(Basis::Power);
    f.terms.emplace(Partition{}, QTFraction(1));
    return f;
}
SymFunc SymFunc::e(int k) {
    if (k < 0) throw InvalidArgument("e(k): k >= 0");
    SymFunc f(Basis::Elementary);
    f.terms.emplace(k == 0 ? Partition{} : Partition{k}, QTFraction(1));
    return f;
}
SymFunc SymFunc::h(int k) {
    if (k < 0) throw InvalidArgument("h(k): k >= 0");
    SymFunc f(Basis::Homogeneous);
    f.terms.emplace(k == 0 ? Partition{} : Partition{k}, QTFraction(1));
    return f;
}
SymFunc SymFunc::p(int k) {
    if (k < 1) throw InvalidArgument("p(k): k >= 1");
    SymFunc f(Basis::Power);
    f.terms.emplace(Partition{k}, QTFraction(1));
    return f;
}
SymFunc SymFunc::s(const Partition& lam) {
    if (!is_partition(lam)) throw InvalidArgument("s(lam): not a partition");
    SymFunc f(Basis::Schur);
    f.terms.emplace(lam, QTFraction(1));
    return f;
}
SymFunc SymFunc::m(const Partition& lam) {
    if (!is_partition(lam)) throw InvalidArgument("m(lam): not a partition");
    SymFunc f(Basis::Monomial);
    f.terms.emplace(lam, QTFraction(1));
    return f;
}
SymFunc SymFunc::htilde_gen(const Partition& lam) {
    if (!is_partition(lam)) throw InvalidArgument("H(lam): not a partition");
    SymFunc f(Basis::Macdonald);
    f.terms.emplace(lam, QTFraction(1));
    return f;
}

SymEngine::SymEngine(int degree_bound) : bound_(degree_bound) {
    if (const char* dir = std::getenv("RSL_CACHE_DIR")) cache_dir_ = dir;
}

void SymEngine::check_degree(int n) const {
    if (n > bound_)
        throw DegreeBoundExceeded("degree " + std::to_string(n) + " exceeds bound " +
                                  std::to_string(bound_));
}

SymEngine::DegreeTables& SymEngine::tables(int n) {
    check_degree(n);
    auto it = degrees_.find(n);
    if (it != degrees_.end()) return it->second;
    DegreeTables t;
    t.parts = partitions_of(n);
    for (size_t i = 0; i < t.parts.size(); ++i) t.index.emplace(t.parts[i], (int)i);
    t.z.reserve(t.parts.size());
    for (auto& p : t.parts) t.z.push_back(z_of(p));
    // Kostka inverse: upper unitriangular in descending-lex order
    const int N = (int)t.parts.size();
    std::vector<std::vector<mpz_class>> K(N, std::vector<mpz_class>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) K[i][j] = kostka(t.parts[i], t.parts[j]);
    t.kostka_inv.assign(N, std::vector<mpz_class>(N, 0));
    for (int i = N - 1; i >= 0; --i) {
        t.kostka_inv[i][i] = 1;
        for (int j = i + 1; j < N; ++j) {
            mpz_class s = 0;
            for (int k = i + 1; k <= j; ++k) s += K[i][k] * t.kostka_inv[k][j];
            t.kostka_inv[i][j] = -s;
        }
    }
    return degrees_.emplace(n, std::move(t)).first->second;
}

SymEngine::RatMap SymEngine::e_to_p(int k) {
    RatMap out;
    for (const Partition& nu : partitions_of(k)) {
        mpq_class c(1);
        c /= mpq_class(z_of(nu));
        if ((k - (int)nu.size()) % 2 == 1) c = -c;
        out.emplace(nu, c);
    }
    return out;
}

SymEngine::RatMap SymEngine::h_to_p(int k) {
    RatMap out;
    for (const Partition& nu : partitions_of(k)) out.emplace(nu, mpq_class(1) / mpq_class(z_of(nu)));
    return out;
}

namespace {
Partition merge_parts(const Partition& a, const Partition& b) {
    Partition r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r),
               std::greater<int>());
    return r;
}
}  // namespace

const SymEngine::RatMap& SymEngine::h_prod_to_p(int n, const Partition& mu) {
    DegreeTables& t = tables(n);
    auto it = t.h_prod_p.find(mu);
    if (it != t.h_prod_p.end()) return it->second;
    RatMap acc;
    acc.emplace(Partition{}, mpq_class(1));
    for (int part : mu) {
        RatMap factor = h_to_p(part);
        RatMap next;
        for (auto& [pa, ca] : acc)
            for (auto& [pb, cb] : factor) {
                Partition key = merge_parts(pa, pb);
                auto [jt, inserted] = next.emplace(key, ca * cb);
                if (!inserted) jt->second += ca * cb;
            }
        acc = std::move(next);
    }
    return t.h_prod_p.emplace(mu, std::move(acc)).first->second;
}

namespace {
// Expand a Jacobi-Trudi determinant det(g_{lam_i - i + sigma(i)}) into
// products of the one-row generators, as a signed integer combination.
std::map<Partition, mpz_class, PartLexDesc> jt_expand(const Partition& lam) {
    std::map<Partition, mpz_class, PartLexDesc> out;
    const int L = (int)lam.size();
    if (L == 0) {
        out.emplace(Partition{}, 1);
        return out;
    }
    std::vector<int> sigma(L);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j)
                if (sigma[i] > sigma[j]) ++inv;
        std::vector<int> degs;
        bool ok = true;
        for (int i = 0; i < L && ok; ++i) {
            int d = lam[i] - i + sigma[i];
            if (d < 0) ok = false;
            else if (d > 0) degs.push_back(d);
        }
        if (!ok) continue;
        std::sort(degs.begin(), degs.end(), std::greater<int>());
        mpz_class sgn = (inv % 2 == 0) ? 1 : -1;
        auto [it, inserted] = out.emplace(degs, sgn);
        if (!inserted) {
            it->second += sgn;
            if (it->second == 0) out.erase(it);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}
}  // namespace

const SymEngine::RatMap& SymEngine::s_to_p(int n, const Partition& lam) {
    DegreeTables& t = tables(n);
    auto it = t.s_p.find(lam);
    if (it != t.s_p.end()) return it->second;
    auto sh = t.s_h.find(lam);
    if (sh == t.s_h.end()) sh = t.s_h.emplace(lam, jt_expand(lam)).first;
    RatMap acc;
    for (auto& [nu, c] : sh->second) {
        const RatMap& hp = h_prod_to_p(n, nu);
        for (auto& [rho, r] : hp) {
            mpq_class v = r * mpq_class(c);
            auto [jt, inserted] = acc.emplace(rho, v);
            if (!inserted) jt->second += v;
        }
    }
    for (auto it2 = acc.begin(); it2 != acc.end();) {
        if (it2->second == 0) it2 = acc.erase(it2);
        else ++it2;
    }
    return t.s_p.emplace(lam, std::move(acc)).first->second;
}

SymEngine::FracMap SymEngine::to_p_coords(const SymFunc& f) {
    FracMap out;
    auto add = [&](const Partition& p, const QTFraction& c) {
        if (c.is_zero()) return;
        auto it = out.find(p);
        if (it == out.end()) {
            out.emplace(p, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (auto& [lam, coeff] : f.terms) {
        int n = (int)part_size(lam);
        check_degree(n);
        switch (f.basis) {
            case Basis::Power:
                add(lam, coeff);
                break;
            case Basis::Schur: {
                for (auto& [nu, r] : s_to_p(n, lam)) add(nu, coeff * QTFraction(r));
                break;
            }
            case Basis::Homogeneous: {
                for (auto& [nu, r] : h_prod_to_p(n, lam)) add(nu, coeff * QTFraction(r));
                break;
            }
            case Basis::Elementary: {
                RatMap acc;
                acc.emplace(Partition{}, mpq_class(1));
                for (int part : lam) {
                    RatMap factor = e_to_p(part);
                    RatMap next;
                    for (auto& [pa, ca] : acc)
                        for (auto& [pb, cb] : factor) {
                            Partition key = merge_parts(pa, pb);
                            auto [jt, ins] = next.emplace(key, ca * cb);
                            if (!ins) jt->second += ca * cb;
                        }
                    acc = std::move(next);
                }
                for (auto& [nu, r] : acc) add(nu, coeff * QTFraction(r));
                break;
            }
            case Basis::Monomial: {
                DegreeTables& t = tables(n);
                int j = t.index.at(lam);
                const int N = (int)t.parts.size();
                // m_{mu_j} = sum_{i >= j} (K^{-1})[j][i] s_{lambda_i}
                for (int i = j; i < N; ++i) {
                    if (t.kostka_inv[j][i] == 0) continue;
                    for (auto& [nu, r] : s_to_p(n, t.parts[i]))
                        add(nu, coeff * QTFraction(r * mpq_class(t.kostka_inv[j][i])));
                }
                break;
            }
            case Basis::Macdonald: {
                ensure_macdonald(n);
                DegreeTables& t = tables(n);
                for (auto& [nu, fr] : t.htilde_p.at(lam)) add(nu, coeff * fr);
                break;
            }
        }
    }
    return out;
}

SymFunc SymEngine::from_p(const FracMap& coords, int n, Basis target) {
    SymFunc out(target);
    if (coords.empty()) return out;
    DegreeTables& t = tables(n);
    auto slice_pair = [&](const FracMap& g) {
        // <f, g> over this degree: sum z_nu f_nu g_nu
        QTFraction s(0);
        for (auto& [nu, c] : coords) {
            auto it = g.find(nu);
            if (it == g.end()) continue;
            QTFraction term = c * it->second;
            term = term * QTFraction(Int(t.z[t.index.at(nu)]));
            s += term;
        }
        return s;
    };
    switch (target) {
        case Basis::Power: {
            for (auto& [nu, c] : coords) out.add_term(nu, c);
            break;
        }
        case Basis::Schur: {
            for (const Partition& lam : t.parts) {
                FracMap g;
                for (auto& [nu, r] : s_to_p(n, lam)) g.emplace(nu, QTFraction(r));
                QTFraction c = slice_pair(g);
                out.add_term(lam, c);
            }
            break;
        }
        case Basis::Monomial: {
            for (const Partition& mu : t.parts) {
                FracMap g;
                for (auto& [nu, r] : h_prod_to_p(n, mu)) g.emplace(nu, QTFraction(r));
                out.add_term(mu, slice_pair(g));
            }
            break;
        }
        case Basis::Homogeneous:
        case Basis::Elementary: {
            // via Schur coordinates and the (dual) Jacobi-Trudi tables
            SymFunc s = from_p(coords, n, Basis::Schur);
            for (auto& [lam, c] : s.terms) {
                auto& table = (target == Basis::Homogeneous) ? t.s_h : t.s_e;
                auto it = table.find(lam);
                if (it == table.end()) {
                    Partition key = (target == Basis::Homogeneous) ? lam : conjugate(lam);
                    it = table.emplace(lam, jt_expand(key)).first;
                }
                for (auto& [nu, sgn] : it->second)
                    out.add_term(nu, c * QTFraction(Int(sgn)));
            }
            break;
        }
        case Basis::Macdonald: {
            ensure_macdonald(n);
            for (const Partition& mu : t.parts) {
                QTFraction c = star_pairing(n, coords, t.htilde_p.at(mu));
                for (const QTPoly& f : t.star_norm_factors.at(mu)) c.divide_by(f);
                out.add_term(mu, c);
            }
            break;
        }
    }
    return out;
}

SymFunc SymEngine::convert(const SymFunc& f, Basis target) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    SymFunc out(target);
    for (int n : f.degrees()) {
        SymFunc slice(f.basis);
        for (auto& [p, c] : f.terms)
            if ((int)part_size(p) == n) slice.terms.emplace(p, c);
        FracMap coords = to_p_coords(slice);
        out += from_p(coords, n, target);
    }
    out.basis = target;
    return out;
}

SymFunc SymEngine::multiply(const SymFunc& a, const SymFunc& b) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    FracMap pa = to_p_coords(a), pb = to_p_coords(b);
    SymFunc out(Basis::Power);
    for (auto& [x, cx] : pa)
        for (auto& [y, cy] : pb) {
            if ((int)(part_size(x) + part_size(y)) > bound_)
                throw DegreeBoundExceeded("multiply: product degree exceeds bound");
            out.add_term(merge_parts(x, y), cx * cy);
        }
    return out;
}

SymFunc SymEngine::d_k(const SymFunc& f, int k) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    FracMap fp = to_p_coords(f);
    SymFunc out(Basis::Power);
    // cache e_i expansions locally per call
    std::map<int, RatMap> e_exp;
    auto e_of = [&](int i) -> const RatMap& {
        auto it = e_exp.find(i);
        if (it == e_exp.end()) it = e_exp.emplace(i, e_to_p(i)).first;
        return it->second;
    };
    for (auto& [mu, c] : fp) {
        int deg = (int)part_size(mu);
        if (deg + k > bound_)
            throw DegreeBoundExceeded("d_k: result degree exceeds bound");
        // distinct parts with multiplicities
        std::vector<std::pair<int, int>> groups;
        for (int x : mu) {
            if (!groups.empty() && groups.back().first == x) groups.back().second++;
            else groups.push_back({x, 1});
        }
        // choose how many of each part to substitute with M/z
        std::vector<int> take(groups.size(), 0);
        std::function<void(size_t, int, QTPoly, Partition)> rec =
            [&](size_t gi, int j, QTPoly wpoly, Partition rest) {
                if (gi == groups.size()) {
                    int i = k + j;
                    if (i < 0) return;
                    QTFraction base = c * QTFraction(std::move(wpoly));
                    if (i % 2 == 1) base = -base;
                    if (i == 0) {
                        out.add_term(rest, base);
                        return;
                    }
                    for (auto& [nu, r] : e_of(i))
                        out.add_term(merge_parts(rest, nu), base * QTFraction(r));
                    return;
                }
                auto [r, mult] = groups[gi];
                // p_r[M/z^r] factor: (1-q^r)(1-t^r), with binomial choice weight
                QTPoly br = (QTPoly(1) - QTPoly::monomial(1, r, 0)) *
                            (QTPoly(1) - QTPoly::monomial(1, 0, r));
                QTPoly pw(1);
                mpz_class binom = 1;
                for (int s = 0; s <= mult; ++s) {
                    Partition rest2 = rest;
                    for (int u = 0; u < mult - s; ++u) rest2 = merge_parts(rest2, {r});
                    rec(gi + 1, j + s * r, wpoly * pw * Int(binom), rest2);
                    pw *= br;
                    binom = binom * (mult - s) / (s + 1);
                }
            };
        rec(0, 0, QTPoly(1), Partition{});
    }
    return out;
}

std::vector<std::pair<int, int>> SymEngine::split_candidates(int m, int n) {
    std::vector<std::pair<int, int>> best;
    long bestdist = -1;
    for (int a = 1; a <= m - 1; ++a) {
        long b = ((long)n * a) / m + 1;  // least b with m b - n a > 0
        if (b > n) continue;
        long dist = (long)m * b - (long)n * a;
        if (bestdist < 0 || dist < bestdist) {
            bestdist = dist;
            best.clear();
        }
        if (dist == bestdist) best.push_back({a, (int)b});
    }
    if (best.empty()) throw NoValidSplit("split: no lattice point strictly above the diagonal");
    return best;
}

std::pair<std::pair<int, int>, std::pair<int, int>> SymEngine::split(int m, int n) {
    if (m < 2) throw InvalidArgument("split: base case (1,k) has no split");
    auto cands = split_candidates(m, n);
    auto ab = cands.front();  // smallest a
    return {ab, {m - ab.first, n - ab.second}};
}

SymFunc SymEngine::q_op_with_split(int m, int n, std::pair<int, int> ab, const SymFunc& f) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto [a, b] = ab;
    int c = m - a, d = n - b;
    SymFunc g = q_op(a, b, q_op(c, d, f)) - q_op(c, d, q_op(a, b, f));
    QTFraction invM(1);
    invM.divide_by(QTPoly::var_q() - QTPoly(1));
    invM.divide_by(QTPoly::var_t() - QTPoly(1));
    g.scale(invM);
    return g;
}

SymFunc SymEngine::q_op(int m, int n, const SymFunc& f) {
    if (m < 1 || n < 0) throw InvalidArgument("q_op: need m >= 1, n >= 0");
    if (f.is_zero()) return SymFunc(Basis::Power);
    if (f.max_degree() + n > bound_)
        throw DegreeBoundExceeded("q_op: result degree exceeds bound");
    if (m == 1) {
        SymFunc g = d_k(f, n);
        if (n % 2 == 1) g.scale(QTFraction(-1));
        return g;
    }
    std::lock_guard<std::recursive_mutex> lock(mu_);
    std::ostringstream key;
    key << m << "|" << n << "|" << basis_letter(f.basis) << "|" << f.str();
    auto it = qop_memo_.find(key.str());
    if (it != qop_memo_.end()) return it->second;
    SymFunc g = q_op_with_split(m, n, split(m, n).first, f);
    qop_memo_.emplace(key.str(), g);
    return g;
}

SymFunc SymEngine::q_op_one(int m, int n) { return q_op(m, n, SymFunc::one()); }

QTFraction SymEngine::star_pairing(int n, const FracMap& f, const FracMap& g) {
    DegreeTables& t = tables(n);
    QTFraction total(0);
    for (auto& [nu, cf] : f) {
        auto it = g.find(nu);
        if (it == g.end()) continue;
        // twist of omega g[X M]: (-1)^{|nu|-l(nu)} prod (1-q^r)(1-t^r)
        QTPoly tw(1);
        for (int r : nu)
            tw *= (QTPoly(1) - QTPoly::monomial(1, r, 0)) * (QTPoly(1) - QTPoly::monomial(1, 0, r));
        if ((n - (int)nu.size()) % 2 == 1) tw = -tw;
        QTFraction term = cf * it->second;
        term = term * QTFraction(tw * Int(t.z[t.index.at(nu)]));
        total += term;
    }
    return total;
}

SymFunc SymEngine::nabla(const SymFunc& f, bool inverse) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    SymFunc out(f.basis);
    for (int n : f.degrees()) {
        SymFunc slice(f.basis);
        for (auto& [p, c] : f.terms)
            if ((int)part_size(p) == n) slice.terms.emplace(p, c);
        if (n == 0) {
            out += slice;
            continue;
        }
        FracMap coords = to_p_coords(slice);
        ensure_macdonald(n);
        DegreeTables& t = tables(n);
        FracMap result;
        for (const Partition& mu : t.parts) {
            QTFraction c = star_pairing(n, coords, t.htilde_p.at(mu));
            if (c.is_zero()) continue;
            for (const QTPoly& fac : t.star_norm_factors.at(mu)) c.divide_by(fac);
            long nq = n_stat(conjugate(mu)), nt = n_stat(mu);
            if (!inverse) {
                c = c * QTFraction(QTPoly::monomial(1, (int)nq, (int)nt));
            } else {
                c.divide_by_monomial((int)nq, (int)nt);
            }
            for (auto& [nu, hv] : t.htilde_p.at(mu)) {
                QTFraction term = c * hv;
                auto [it, inserted] = result.emplace(nu, term);
                if (!inserted) {
                    it->second += term;
                    if (it->second.is_zero()) result.erase(it);
                }
            }
        }
        out += from_p(result, n, f.basis);
    }
    return out;
}

QTFraction SymEngine::hall_pairing(const SymFunc& f, const SymFunc& g) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (f.degrees() != g.degrees())
        throw DegreeMismatch("hall_pairing: degree mismatch");
    FracMap fp = to_p_coords(f), gp = to_p_coords(g);
    QTFraction total(0);
    for (auto& [nu, cf] : fp) {
        auto it = gp.find(nu);
        if (it == gp.end()) continue;
        QTFraction term = cf * it->second;
        term = term * QTFraction(Int(z_of(nu)));
        total += term;
    }
    return total;
}

SchurExpansion SymEngine::to_schur_expansion(const SymFunc& f, int m, int n) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    SymFunc s = convert(f, Basis::Schur);
    SchurExpansion e;
    e.m = m;
    e.n = n ? n : s.max_degree();
    for (auto& [lam, c] : s.terms) {
        auto poly = c.to_poly();
        if (!poly)
            throw Error("to_schur_expansion: coefficient of s_" + partition_str(lam) +
                        " is not polynomial: " + c.str());
        if (!poly->is_zero()) e.coeffs.emplace(lam, std::move(*poly));
    }
    return e;
}

}  // namespace rsl
