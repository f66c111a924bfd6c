#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "rsl/partition.hpp"
#include "rsl/qt_poly.hpp"
#include "rsl/schur_expand.hpp"

namespace rsl {

enum class Basis { Monomial, Elementary, Homogeneous, Power, Schur, Macdonald };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// A finite linear combination of basis elements indexed by partitions, with
// coefficients in the fraction field of Z[q,t]. Mixed degrees are allowed;
// operators act on each homogeneous component separately.
struct SymFunc {
    Basis basis = Basis::Power;
    std::map<Partition, QTFraction, PartLexDesc> terms;

    SymFunc() = default;
    explicit SymFunc(Basis b) : basis(b) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const Partition& p, const QTFraction& c);
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc& scale(const QTFraction& c);
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    std::vector<int> degrees() const;
    int max_degree() const;
    std::string str() const;

    static SymFunc one();  // p basis, empty partition
    static SymFunc e(int k);
    static SymFunc h(int k);
    static SymFunc p(int k);
    static SymFunc s(const Partition& lam);
    static SymFunc m(const Partition& lam);
    static SymFunc htilde_gen(const Partition& lam);
};

// Exact symmetric-function engine with plethystic operators. Transition
// tables are cached per degree behind a mutex; independent queries may run
// concurrently.
class SymEngine {
public:
    explicit SymEngine(int degree_bound = 8);

    int degree_bound() const { return bound_; }

    SymFunc convert(const SymFunc& f, Basis target);

    SymFunc multiply(const SymFunc& a, const SymFunc& b);

    // D_k F[X] = F[X + M/z] sum_i (-z)^i e_i[X] |_{z^k},  M = (1-t)(1-q).
    SymFunc d_k(const SymFunc& f, int k);

    // Split(m,n) = (a,b) + (c,d): (a,b) is the lattice point with
    // 1 <= a <= m-1 strictly above the diagonal minimizing m b - n a,
    // ties broken by smallest a.
    static std::pair<std::pair<int, int>, std::pair<int, int>> split(int m, int n);

    // All distance-minimizing above-diagonal candidates (non-coprime shapes
    // have several; each yields the same operator).
    static std::vector<std::pair<int, int>> split_candidates(int m, int n);

    // Q_{m,n} applied to f. Base case Q_{1,k} = (-1)^k D_k; otherwise the
    // commutator (1/M)(Q_{a,b} Q_{c,d} - Q_{c,d} Q_{a,b}) over Split(m,n).
    SymFunc q_op(int m, int n, const SymFunc& f);
    // Memoized Q_{m,n}(1), with an explicit split choice override for the
    // split-independence checks.
    SymFunc q_op_one(int m, int n);
    SymFunc q_op_with_split(int m, int n, std::pair<int, int> ab, const SymFunc& f);

    // Modified Macdonald polynomial via the inv/maj filling statistics,
    // returned in the Schur basis.
    SymFunc htilde(const Partition& mu);

    SymFunc nabla(const SymFunc& f, bool inverse = false);

    // Standard Hall scalar product (dual bases m/h, orthonormal Schur).
    QTFraction hall_pairing(const SymFunc& f, const SymFunc& g);

    // Schur expansion with polynomial coefficients; throws if a coefficient
    // fails to clear its denominator.
    SchurExpansion to_schur_expansion(const SymFunc& f, int m = 0, int n = 0);

private:
    using RatMap = std::map<Partition, mpq_class, PartLexDesc>;
    using FracMap = std::map<Partition, QTFraction, PartLexDesc>;

    struct DegreeTables {
        std::vector<Partition> parts;
        std::map<Partition, int, PartLexDesc> index;
        std::vector<mpz_class> z;
        std::map<Partition, RatMap> h_prod_p;        // h_mu in p basis
        std::map<Partition, RatMap> s_p;             // s_lambda in p basis
        std::map<Partition, std::map<Partition, mpz_class, PartLexDesc>> s_h;  // JT over h
        std::map<Partition, std::map<Partition, mpz_class, PartLexDesc>> s_e;  // dual JT over e
        std::vector<std::vector<mpz_class>> kostka_inv;  // upper triangular
        std::map<Partition, std::map<Partition, QTPoly, PartLexDesc>> htilde_s;
        std::map<Partition, FracMap> htilde_p;
        std::map<Partition, std::vector<QTPoly>> star_norm_factors;
        bool macdonald_ready = false;
    };

    DegreeTables& tables(int n);
    void ensure_macdonald(int n);
    void check_degree(int n) const;

    RatMap e_to_p(int k);
    RatMap h_to_p(int k);
    const RatMap& s_to_p(int n, const Partition& lam);
    const RatMap& h_prod_to_p(int n, const Partition& mu);

    // star product <f, omega g[X M]> on p-coordinate maps of equal degree
    QTFraction star_pairing(int n, const FracMap& f, const FracMap& g);

    FracMap to_p_coords(const SymFunc& f);       // single-degree slice
    SymFunc from_p(const FracMap& coords, int n, Basis target);

    std::recursive_mutex mu_;
    int bound_;
    std::map<int, DegreeTables> degrees_;
    std::map<std::string, SymFunc> qop_memo_;
    std::string cache_dir_;
};

}  // namespace rsl
