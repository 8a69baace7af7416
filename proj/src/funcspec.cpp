#include "nevdiff/funcspec.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

#include "nevdiff/errors.hpp"

namespace nevdiff {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) { skip(); }

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = eof() ? "end of input" : "'" + std::string(1, s[pos]) + "'";
        throw ParseError(pos, "expected " + expected + ", got " + got);
    }

    void expect(char c) {
        if (peek() != c) fail("'" + std::string(1, c) + "'");
        ++pos;
        skip();
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos;
        skip();
        return true;
    }

    std::string ident() {
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (pos == start) fail("identifier");
        std::string out = s.substr(start, pos - start);
        skip();
        return out;
    }

    double number() {
        std::size_t start = pos;
        if (peek() == '+' || peek() == '-') ++pos;
        bool digits = false;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            ++pos;
            digits = true;
        }
        if (peek() == '.') {
            ++pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                ++pos;
                digits = true;
            }
        }
        if (!digits) {
            pos = start;
            fail("number");
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t mark = pos;
            ++pos;
            if (peek() == '+' || peek() == '-') ++pos;
            if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            } else {
                pos = mark;  // 'e' belongs to something else
            }
        }
        double v = std::strtod(s.c_str() + start, nullptr);
        skip();
        return v;
    }

    long integer() {
        double v = number();
        long n = (long)v;
        if ((double)n != v) fail("integer");
        return n;
    }

    // A, A+Bi, A-Bi, Bi, i, -i
    Complex complex_value() {
        double re = 0, im = 0;
        if (peek() == 'i') {
            ++pos;
            skip();
            return Complex(0, 1);
        }
        if (peek() == '-' && pos + 1 < s.size() && s[pos + 1] == 'i') {
            pos += 2;
            skip();
            return Complex(0, -1);
        }
        double first = number();
        if (peek() == 'i') {
            ++pos;
            skip();
            return Complex(0, first);
        }
        re = first;
        if (peek() == '+' || peek() == '-') {
            double sign = peek() == '-' ? -1.0 : 1.0;
            std::size_t mark = pos;
            ++pos;
            skip();
            if (peek() == 'i') {
                ++pos;
                skip();
                im = sign;
            } else if (std::isdigit((unsigned char)peek()) || peek() == '.') {
                double b = number();
                if (peek() == 'i') {
                    ++pos;
                    skip();
                    im = sign * b;
                } else {
                    pos = mark;  // a following term, not an imaginary part
                }
            } else {
                pos = mark;
            }
        }
        return Complex(re, im);
    }
};

FunctionModel parse_unit(Lexer& lx) {
    std::size_t at = lx.pos;
    std::string name = lx.ident();
    if (name == "cossqrt") return FunctionModel::cos_sqrt();
    if (name == "exp") {
        lx.expect('(');
        std::size_t zat = lx.pos;
        std::string var = lx.ident();
        if (var != "z") throw ParseError(zat, "expected 'z' inside exp(...)");
        lx.expect('^');
        long k = lx.integer();
        if (k < 0) throw ParseError(at, "exp exponent must be >= 0");
        lx.expect(')');
        return FunctionModel::exp_poly((int)k);
    }
    if (name == "prod") {
        lx.expect('(');
        std::size_t kat = lx.pos;
        std::string key = lx.ident();
        if (key != "lambda") throw ParseError(kat, "expected 'lambda=' inside prod(...)");
        lx.expect('=');
        double lam = lx.number();
        lx.expect(')');
        return FunctionModel::canonical_product(lam);
    }
    if (name == "poly") {
        lx.expect('(');
        std::vector<Complex> c;
        c.push_back(lx.complex_value());
        while (lx.accept(',')) c.push_back(lx.complex_value());
        lx.expect(')');
        return FunctionModel::polynomial(std::move(c));
    }
    if (name == "rat") {
        lx.expect('(');
        std::size_t kat = lx.pos;
        std::string key = lx.ident();
        if (key != "zeros") throw ParseError(kat, "expected 'zeros=[...]' inside rat(...)");
        lx.expect('=');
        lx.expect('[');
        std::vector<Complex> zeros, poles;
        Complex scale(1, 0);
        if (!lx.accept(']')) {
            zeros.push_back(lx.complex_value());
            while (lx.accept(',')) zeros.push_back(lx.complex_value());
            lx.expect(']');
        }
        while (lx.accept(';')) {
            std::size_t pat = lx.pos;
            std::string key2 = lx.ident();
            if (key2 == "poles") {
                lx.expect('=');
                lx.expect('[');
                if (!lx.accept(']')) {
                    poles.push_back(lx.complex_value());
                    while (lx.accept(',')) poles.push_back(lx.complex_value());
                    lx.expect(']');
                }
            } else if (key2 == "scale") {
                lx.expect('=');
                scale = lx.complex_value();
            } else {
                throw ParseError(pat, "expected 'poles' or 'scale'");
            }
        }
        lx.expect(')');
        return FunctionModel::rational(std::move(zeros), std::move(poles), scale);
    }
    if (name == "series") {
        lx.expect('(');
        std::string id = lx.ident();
        lx.expect(')');
        try {
            return FunctionModel::from_series(named_series(id), id);
        } catch (const Error&) {
            throw ParseError(at, "unknown series name '" + id + "'");
        }
    }
    throw ParseError(at, "unknown function atom '" + name + "'");
}

// exp(z^k) next to prod(lambda=L) folds into the combined product family
FunctionModel fold_product(std::vector<FunctionModel>& factors) {
    if (factors.size() == 1) return factors[0];
    if (factors.size() == 2) {
        for (int i = 0; i < 2; ++i) {
            auto k = factors[i].exp_poly_degree();
            auto lam = factors[1 - i].product_lambda();
            if (k && lam) return FunctionModel::exp_poly_product(*k, *lam);
        }
    }
    return FunctionModel::product(factors);
}

}  // namespace

FunctionModel parse_function_spec(const std::string& text) {
    Lexer lx(text);
    std::vector<FunctionModel> factors{parse_unit(lx)};
    while (!lx.eof()) {
        if (lx.accept('*')) {
            factors.push_back(parse_unit(lx));
        } else if (lx.accept('/')) {
            FunctionModel num = fold_product(factors);
            FunctionModel den = parse_unit(lx);
            factors.clear();
            factors.push_back(FunctionModel::quotient(num, den));
        } else {
            lx.fail("'*', '/' or end of input");
        }
    }
    return fold_product(factors);
}

Complex parse_complex(const std::string& text) {
    Lexer lx(text);
    Complex v = lx.complex_value();
    if (!lx.eof()) lx.fail("end of input");
    return v;
}

}  // namespace nevdiff
