#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsl/errors.hpp"

namespace rsl {

using Int = mpz_class;

// Exponent pair of a q^a t^b monomial. Negative t-exponents are allowed in
// intermediates carrying return-factor weights; q-exponents stay nonnegative
// everywhere in practice but the type does not care.
struct Mono {
    int q = 0;
    int t = 0;
    friend bool operator==(const Mono&, const Mono&) = default;
};

// Degree-lexicographic, largest first, so map iteration starts at the
// leading term.
struct MonoDegLexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        long da = (long)a.q + a.t, db = (long)b.q + b.t;
        if (da != db) return da > db;
        if (a.q != b.q) return a.q > b.q;
        return a.t > b.t;
    }
};

// Sparse exact Laurent polynomial in q and t with arbitrary-precision
// integer coefficients. No zero coefficients are ever stored.
class QTPoly {
public:
    using TermMap = std::map<Mono, Int, MonoDegLexDesc>;

    QTPoly() = default;
    QTPoly(long c) { add_term({0, 0}, Int(c)); }
    QTPoly(const Int& c) { add_term({0, 0}, c); }

    static QTPoly monomial(Int c, int qexp, int texp) {
        QTPoly p;
        p.add_term({qexp, texp}, std::move(c));
        return p;
    }
    static QTPoly var_q() { return monomial(1, 1, 0); }
    static QTPoly var_t() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Mono& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QTPoly& operator+=(const QTPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    QTPoly& operator-=(const QTPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    QTPoly operator-() const {
        QTPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b) {
        QTPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_)
                r.add_term({ma.q + mb.q, ma.t + mb.t}, ca * cb);
        return r;
    }
    QTPoly& operator*=(const QTPoly& o) { return *this = *this * o; }
    QTPoly& operator*=(const Int& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend QTPoly operator*(QTPoly a, const Int& c) { return a *= c; }
    friend QTPoly operator*(const Int& c, QTPoly a) { return a *= c; }

    friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }

    // Total order for use as a map key / canonical factor sorting.
    friend bool operator<(const QTPoly& a, const QTPoly& b);

    std::pair<Mono, Int> leading() const {
        if (is_zero()) throw InvalidArgument("leading term of zero polynomial");
        return *terms_.begin();
    }

    QTPoly swap_qt() const {
        QTPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(Mono{m.t, m.q}, c);
        return r;
    }
    bool symmetric_qt() const { return *this == swap_qt(); }

    int min_qexp() const;
    int min_texp() const;
    bool has_negative_exponent() const { return min_qexp() < 0 || min_texp() < 0; }

    // Substitute q = 1 (collapses onto t-powers).
    QTPoly subst_q_one() const {
        QTPoly r;
        for (auto& [m, c] : terms_) r.add_term({0, m.t}, c);
        return r;
    }

    QTPoly shifted(int dq, int dt) const {
        QTPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(Mono{m.q + dq, m.t + dt}, c);
        return r;
    }

    // gcd of all coefficients, signed so content()*primitive matches.
    Int content() const;

    // exact evaluation at integer points; requires nonnegative exponents
    Int eval_at(const Int& qv, const Int& tv) const;

    // Exact division; nullopt if the divisor does not divide.
    std::optional<QTPoly> divide_exact(const QTPoly& d) const;

    // Canonical text form, leading term first: "q^2 + q*t - 3*t^2".
    std::string str() const;

private:
    TermMap terms_;
};

// [n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}; zero for n <= 0.
QTPoly qt_analogue(long n);

// (q,t)-Schur function of a two-row partition: s^{qt}_{(a,b)} = (qt)^b [a-b+1].
// Rejects a < b or b < 0.
QTPoly qt_schur(long a, long b);

// Same but returns 0 outside the two-row-partition domain (b < 0 or a < b),
// the convention used by closed-form coefficient sums.
QTPoly qt_schur_ext(long a, long b);

// A partition with more than two parts has zero (q,t)-Schur function.
bool qt_schur_nonzero(const std::vector<int>& partition);

// [k]_{1/t} = 1 + t^{-1} + ... + t^{-(k-1)}, the return weight. Rejects k <= 0.
QTPoly ret_factor(long k);

// Two-row partition (a >= b >= 0); b == 0 renders as a one-part partition,
// a == 0 as the empty partition.
struct TwoRow {
    long a = 0, b = 0;
    friend bool operator==(const TwoRow&, const TwoRow&) = default;
    friend auto operator<=>(const TwoRow&, const TwoRow&) = default;
};

// Greedy decomposition of a q<->t symmetric polynomial with nonnegative
// exponents into (q,t)-Schur functions, leading monomial first.
// Throws NotSymmetric / NotSchurPositive.
std::vector<std::pair<TwoRow, long>> decompose_qt_schur(const QTPoly& p);

// Exact rational function in q,t. The denominator is kept as a factored
// product (each factor content-free with positive leading coefficient) times
// a positive integer scalar, which keeps reduction to exact divisions and
// avoids a general polynomial gcd.
class QTFraction {
public:
    QTFraction() : num_(), scalar_(1) {}
    QTFraction(long c) : num_(c), scalar_(1) {}
    QTFraction(const Int& c) : num_(c), scalar_(1) {}
    QTFraction(QTPoly p) : num_(std::move(p)), scalar_(1) {}
    QTFraction(const mpq_class& r) : num_(QTPoly(Int(r.get_num()))), scalar_(r.get_den()) { reduce(); }

    static QTFraction ratio(QTPoly num, QTPoly den);

    bool is_zero() const { return num_.is_zero(); }
    const QTPoly& num() const { return num_; }
    const std::vector<QTPoly>& den_factors() const { return den_; }
    const Int& den_scalar() const { return scalar_; }
    QTPoly den_poly() const;

    QTFraction operator-() const;
    QTFraction& operator+=(const QTFraction& o);
    QTFraction& operator-=(const QTFraction& o) { return *this += -o; }
    QTFraction& operator*=(const QTFraction& o);
    friend QTFraction operator+(QTFraction a, const QTFraction& b) { return a += b; }
    friend QTFraction operator-(QTFraction a, const QTFraction& b) { return a -= b; }
    friend QTFraction operator*(QTFraction a, const QTFraction& b) { return a *= b; }

    QTFraction& divide_by(const QTPoly& factor);
    QTFraction& divide_by_int(const Int& c);
    // Divide by q^a t^b (monomial shift of the numerator).
    QTFraction& divide_by_monomial(int qexp, int texp);

    friend bool operator==(const QTFraction& a, const QTFraction& b) {
        return (a.num_ * b.den_poly()) == (b.num_ * a.den_poly());
    }

    bool is_polynomial() const { return den_.empty() && scalar_ == 1; }
    // Polynomial value if the fraction reduces to one.
    std::optional<QTPoly> to_poly() const;
    const QTPoly& require_poly() const;

    std::string str() const;

private:
    void push_factor(QTPoly f);
    void reduce();

    QTPoly num_;
    std::vector<QTPoly> den_;  // sorted canonical factors
    Int scalar_;               // > 0
};

}  // namespace rsl
