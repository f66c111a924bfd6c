#include "rsl/qt_poly.hpp"

#include <algorithm>
#include <sstream>

namespace rsl {

bool operator<(const QTPoly& a, const QTPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    MonoDegLexDesc lt;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return lt(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

int QTPoly::min_qexp() const {
    int m = 0;
    bool first = true;
    for (auto& [mono, c] : terms_) {
        if (first || mono.q < m) m = mono.q;
        first = false;
    }
    return m;
}

int QTPoly::min_texp() const {
    int m = 0;
    bool first = true;
    for (auto& [mono, c] : terms_) {
        if (first || mono.t < m) m = mono.t;
        first = false;
    }
    return m;
}

Int QTPoly::content() const {
    Int g = 0;
    for (auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int QTPoly::eval_at(const Int& qv, const Int& tv) const {
    Int total = 0;
    for (auto& [m, c] : terms_) {
        if (m.q < 0 || m.t < 0) throw InvalidArgument("eval_at: negative exponent");
        Int qp, tp;
        mpz_pow_ui(qp.get_mpz_t(), qv.get_mpz_t(), m.q);
        mpz_pow_ui(tp.get_mpz_t(), tv.get_mpz_t(), m.t);
        total += c * qp * tp;
    }
    return total;
}

std::optional<QTPoly> QTPoly::divide_exact(const QTPoly& d) const {
    if (d.is_zero()) throw InvalidArgument("division by zero polynomial");
    if (is_zero()) return QTPoly();
    // Monomials are units in the Laurent ring: normalize numerator and
    // denominator separately to min-exponent 0, divide in the polynomial
    // ring (deg-lex leading-term loop, which terminates there), and shift
    // the quotient back by the offset difference.
    int nq = min_qexp(), nt = min_texp();
    int dq = d.min_qexp(), dt = d.min_texp();
    QTPoly rem = shifted(-nq, -nt);
    QTPoly den = d.shifted(-dq, -dt);
    auto [dm, dc] = den.leading();
    QTPoly quot;
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading();
        if (rm.q < dm.q || rm.t < dm.t) return std::nullopt;
        if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
        QTPoly qt = monomial(rc / dc, rm.q - dm.q, rm.t - dm.t);
        quot += qt;
        rem -= den * qt;
    }
    return quot.shifted(nq - dq, nt - dt);
}

std::string QTPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = (m.q != 0 || m.t != 0);
        if (a != 1 || !has_var) {
            os << a.get_str();
            if (has_var) os << "*";
        }
        if (m.q != 0) {
            os << "q";
            if (m.q != 1) os << "^" << m.q;
            if (m.t != 0) os << "*";
        }
        if (m.t != 0) {
            os << "t";
            if (m.t != 1) os << "^" << m.t;
        }
    }
    return os.str();
}

QTPoly qt_analogue(long n) {
    QTPoly p;
    for (long i = 0; i < n; ++i) p.add_term({int(n - 1 - i), int(i)}, 1);
    return p;
}

QTPoly qt_schur(long a, long b) {
    if (b < 0 || a < b) throw InvalidArgument("qt_schur: (a,b) must satisfy a >= b >= 0");
    return QTPoly::monomial(1, int(b), int(b)) * qt_analogue(a - b + 1);
}

QTPoly qt_schur_ext(long a, long b) {
    if (b < 0 || a < b) return QTPoly();
    return qt_schur(a, b);
}

bool qt_schur_nonzero(const std::vector<int>& partition) {
    int nontrivial = 0;
    for (int p : partition)
        if (p > 0) ++nontrivial;
    return nontrivial <= 2;
}

QTPoly ret_factor(long k) {
    if (k <= 0) throw InvalidArgument("ret_factor: k must be positive");
    QTPoly p;
    for (long i = 0; i < k; ++i) p.add_term({0, int(-i)}, 1);
    return p;
}

std::vector<std::pair<TwoRow, long>> decompose_qt_schur(const QTPoly& p) {
    if (p.has_negative_exponent())
        throw NotSymmetric("decompose_qt_schur: negative exponents");
    if (!p.symmetric_qt())
        throw NotSchurPositive("decompose_qt_schur: polynomial is not q<->t symmetric");
    std::vector<std::pair<TwoRow, long>> out;
    QTPoly rem = p;
    while (!rem.is_zero()) {
        auto [m, c] = rem.leading();
        if (m.q < m.t || c < 0 || !c.fits_slong_p())
            throw NotSchurPositive("decompose_qt_schur: greedy subtraction failed at " + rem.str());
        TwoRow tr{m.q, m.t};
        long mult = c.get_si();
        rem -= qt_schur(tr.a, tr.b) * Int(mult);
        out.push_back({tr, mult});
    }
    return out;
}

QTFraction QTFraction::ratio(QTPoly num, QTPoly den) {
    QTFraction f(std::move(num));
    f.divide_by(den);
    return f;
}

QTPoly QTFraction::den_poly() const {
    QTPoly d(scalar_);
    for (auto& f : den_) d *= f;
    return d;
}

void QTFraction::push_factor(QTPoly f) {
    if (f.is_zero()) throw InvalidArgument("QTFraction: zero denominator factor");
    Int c = f.content();
    if (f.leading().second < 0) c = -c;
    if (c != 1) {
        f = *f.divide_exact(QTPoly(c));
        // integer part of the factor moves to the scalar, sign to the numerator
        Int a = c < 0 ? Int(-c) : c;
        scalar_ *= a;
        if (c < 0) num_ = -num_;
    }
    if (f == QTPoly(1)) return;
    den_.push_back(std::move(f));
}

void QTFraction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        scalar_ = 1;
        return;
    }
    for (size_t i = 0; i < den_.size();) {
        if (auto q = num_.divide_exact(den_[i])) {
            num_ = std::move(*q);
            den_.erase(den_.begin() + i);
        } else {
            ++i;
        }
    }
    Int g = num_.content();
    if (g < 0) g = -g;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scalar_.get_mpz_t());
    if (g > 1) {
        num_ = *num_.divide_exact(QTPoly(g));
        scalar_ /= g;
    }
    std::sort(den_.begin(), den_.end());
}

QTFraction QTFraction::operator-() const {
    QTFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

QTFraction& QTFraction::operator+=(const QTFraction& o) {
    // common denominator: multiset max of the factor lists
    std::vector<QTPoly> common;
    std::vector<QTPoly> extra_a, extra_b;  // multiply into the other side
    {
        size_t i = 0, j = 0;
        while (i < den_.size() || j < o.den_.size()) {
            if (j == o.den_.size() || (i < den_.size() && den_[i] < o.den_[j])) {
                common.push_back(den_[i]);
                extra_b.push_back(den_[i]);
                ++i;
            } else if (i == den_.size() || o.den_[j] < den_[i]) {
                common.push_back(o.den_[j]);
                extra_a.push_back(o.den_[j]);
                ++j;
            } else {
                common.push_back(den_[i]);
                ++i;
                ++j;
            }
        }
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), scalar_.get_mpz_t(), o.scalar_.get_mpz_t());
    Int la = o.scalar_ / g, lb = scalar_ / g;
    QTPoly na = num_ * la;
    for (auto& f : extra_a) na *= f;
    QTPoly nb = o.num_ * lb;
    for (auto& f : extra_b) nb *= f;
    num_ = na + nb;
    den_ = std::move(common);
    scalar_ *= la;
    reduce();
    return *this;
}

QTFraction& QTFraction::operator*=(const QTFraction& o) {
    num_ *= o.num_;
    den_.insert(den_.end(), o.den_.begin(), o.den_.end());
    scalar_ *= o.scalar_;
    reduce();
    return *this;
}

QTFraction& QTFraction::divide_by(const QTPoly& factor) {
    push_factor(factor);
    reduce();
    return *this;
}

QTFraction& QTFraction::divide_by_int(const Int& c) {
    if (c == 0) throw InvalidArgument("QTFraction: division by zero");
    if (c < 0) {
        num_ = -num_;
        scalar_ *= -c;
    } else {
        scalar_ *= c;
    }
    reduce();
    return *this;
}

QTFraction& QTFraction::divide_by_monomial(int qexp, int texp) {
    num_ = num_.shifted(-qexp, -texp);
    return *this;
}

std::optional<QTPoly> QTFraction::to_poly() const {
    if (!den_.empty()) return std::nullopt;
    if (scalar_ == 1) return num_;
    return std::nullopt;  // reduced form: scalar > 1 cannot divide the content
}

const QTPoly& QTFraction::require_poly() const {
    if (!is_polynomial())
        throw Error("QTFraction: expected polynomial value, got " + str());
    return num_;
}

std::string QTFraction::str() const {
    if (is_polynomial()) return num_.str();
    std::string s = "(" + num_.str() + ") / (";
    QTPoly d = den_poly();
    s += d.str();
    s += ")";
    return s;
}

}  // namespace rsl
