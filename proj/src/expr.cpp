#include "rsl/expr.hpp"

#include <cctype>

namespace rsl {

namespace {

// A parsed value is a symmetric function in the power basis; scalars are
// constant symmetric functions (empty partition).
struct Parser {
    const std::string& s;
    size_t pos = 0;
    SymEngine& engine;

    explicit Parser(const std::string& text, SymEngine& e) : s(text), engine(e) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw InvalidArgument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    SymFunc parse() {
        SymFunc v = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return v;
    }

    SymFunc expr() {
        SymFunc v = term();
        while (true) {
            skip();
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    SymFunc term() {
        SymFunc v = factor();
        while (true) {
            skip();
            if (eat('*')) {
                v = engine.multiply(v, factor());
            } else if (pos < s.size() &&
                       (std::isalpha((unsigned char)s[pos]) || s[pos] == '(')) {
                v = engine.multiply(v, factor());  // juxtaposition
            } else {
                return v;
            }
        }
    }

    SymFunc factor() {
        SymFunc v = atom();
        skip();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            SymFunc r = SymFunc::one();
            for (long i = 0; i < e; ++i) r = engine.multiply(r, v);
            return r;
        }
        return v;
    }

    long integer() {
        skip();
        bool neg = eat('-');
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    Partition partition_arg() {
        if (!eat('[')) fail("expected [");
        Partition p;
        skip();
        if (!eat(']')) {
            while (true) {
                long v = integer();
                if (v < 0) fail("negative part");
                if (v > 0) p.push_back((int)v);
                skip();
                if (eat(']')) break;
                if (!eat(',')) fail("expected , or ]");
            }
        }
        if (!is_partition(p)) fail("parts must be weakly decreasing");
        return p;
    }

    SymFunc scalar(QTPoly p) {
        SymFunc f(Basis::Power);
        f.add_term({}, QTFraction(std::move(p)));
        return f;
    }

    SymFunc atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            SymFunc v = expr();
            if (!eat(')')) fail("expected )");
            return v;
        }
        if (std::isdigit((unsigned char)c)) return scalar(QTPoly(integer()));
        if (c == 'q' && !(pos + 1 < s.size() && s[pos + 1] == '[')) {
            ++pos;
            return scalar(QTPoly::var_q());
        }
        if (c == 't' && !(pos + 1 < s.size() && s[pos + 1] == '[')) {
            ++pos;
            return scalar(QTPoly::var_t());
        }
        if (std::string("ehpsmH").find(c) != std::string::npos) {
            ++pos;
            Partition lam = partition_arg();
            SymFunc gen;
            switch (c) {
                case 'e': {
                    gen = SymFunc(Basis::Elementary);
                    gen.add_term(lam, QTFraction(1));
                    break;
                }
                case 'h': {
                    gen = SymFunc(Basis::Homogeneous);
                    gen.add_term(lam, QTFraction(1));
                    break;
                }
                case 'p': {
                    gen = SymFunc(Basis::Power);
                    gen.add_term(lam, QTFraction(1));
                    break;
                }
                case 's':
                    gen = SymFunc::s(lam);
                    break;
                case 'm':
                    gen = SymFunc::m(lam);
                    break;
                case 'H':
                    gen = SymFunc::htilde_gen(lam);
                    break;
            }
            return engine.convert(gen, Basis::Power);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

SymFunc parse_symfunc(const std::string& text, SymEngine& engine) {
    Parser p(text, engine);
    return p.parse();
}

}  // namespace rsl
