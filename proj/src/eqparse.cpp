#include "nevdiff/eqparse.hpp"

#include <cctype>
#include <sstream>

#include "nevdiff/errors.hpp"

namespace nevdiff {

namespace {

struct EqLexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit EqLexer(const std::string& text) : s(text) { skip(); }
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

    Rational number() {
        if (!std::isdigit((unsigned char)peek())) fail("number");
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (peek() == '.') throw ParseError(pos, "exact integers/rationals only");
        BigInt num = BigInt::from_string(s.substr(start, pos - start));
        skip();
        if (accept('/')) {
            if (!std::isdigit((unsigned char)peek())) fail("denominator");
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            BigInt den = BigInt::from_string(s.substr(dstart, pos - dstart));
            skip();
            return Rational(num, den);
        }
        return Rational(num, BigInt(1));
    }

    long uint_exponent() {
        if (!std::isdigit((unsigned char)peek())) fail("exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000) throw ParseError(pos, "exponent too large");
            ++pos;
        }
        skip();
        return v;
    }

    // D3 / S0; -1 when next token is not an operator marker
    int op_marker(char& kind) {
        if ((peek() == 'D' || peek() == 'S') && pos + 1 < s.size() &&
            std::isdigit((unsigned char)s[pos + 1])) {
            kind = s[pos];
            ++pos;
            int j = 0;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                j = j * 10 + (s[pos] - '0');
                if (j > 100) throw ParseError(pos, "operator order too large");
                ++pos;
            }
            skip();
            return j;
        }
        return -1;
    }
};

RatPoly poly_sum(EqLexer& lx);

RatPoly poly_atom(EqLexer& lx) {
    if (lx.accept('(')) {
        RatPoly p = poly_sum(lx);
        lx.expect(')');
        return p;
    }
    if (lx.peek() == 'z') {
        ++lx.pos;
        lx.skip();
        return RatPoly::monomial(Rational(1), 1);
    }
    return RatPoly::constant(lx.number());
}

RatPoly poly_pow(EqLexer& lx) {
    RatPoly base = poly_atom(lx);
    if (lx.accept('^')) {
        long e = lx.uint_exponent();
        RatPoly r = RatPoly::constant(Rational(1));
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }
    return base;
}

RatPoly poly_term(EqLexer& lx) {
    RatPoly p = poly_pow(lx);
    while (lx.accept('*')) p = p * poly_pow(lx);
    return p;
}

RatPoly poly_sum(EqLexer& lx) {
    RatPoly total;
    bool neg = false;
    if (lx.accept('-'))
        neg = true;
    else
        lx.accept('+');
    for (;;) {
        RatPoly t = poly_term(lx);
        total = neg ? total - t : total + t;
        if (lx.accept('-'))
            neg = true;
        else if (lx.accept('+'))
            neg = false;
        else
            break;
    }
    return total;
}

struct OpTerm {
    int index = -1;  // order of the D/S marker
    char kind = 0;
    RatPoly poly = RatPoly::constant(Rational(1));
};

OpTerm op_term(EqLexer& lx) {
    OpTerm t;
    for (;;) {
        char kind = 0;
        std::size_t at = lx.pos;
        int j = lx.op_marker(kind);
        if (j >= 0) {
            if (t.index >= 0) throw ParseError(at, "term has two operator markers");
            t.index = j;
            t.kind = kind;
        } else {
            t.poly = t.poly * poly_pow(lx);
        }
        if (!lx.accept('*')) break;
    }
    return t;
}

LinearDifferenceEquation parse_expression_equation(const std::string& text) {
    EqLexer lx(text);
    std::vector<OpTerm> terms;
    char form_kind = 0;
    bool neg = false;
    if (lx.accept('-'))
        neg = true;
    else
        lx.accept('+');
    for (;;) {
        std::size_t at = lx.pos;
        OpTerm t = op_term(lx);
        if (t.index < 0) throw ParseError(at, "term lacks a D or S operator marker");
        if (form_kind && t.kind != form_kind)
            throw ParseError(at, "cannot mix D and S markers in one equation");
        form_kind = t.kind;
        if (neg) t.poly = -t.poly;
        terms.push_back(std::move(t));
        if (lx.accept('-')) {
            neg = true;
        } else if (lx.accept('+')) {
            neg = false;
        } else {
            break;
        }
    }
    if (lx.accept('=')) {
        std::size_t at = lx.pos;
        Rational rhs = lx.number();
        if (!rhs.is_zero()) throw ParseError(at, "right-hand side must be 0");
    }
    if (!lx.eof()) lx.fail("'+', '-', '=' or end of input");

    int n = 0;
    for (const auto& t : terms) n = std::max(n, t.index);
    LinearDifferenceEquation eq;
    eq.form = form_kind == 'S' ? EqForm::Shift : EqForm::Difference;
    eq.coeffs.assign(n + 1, RatPoly());
    for (const auto& t : terms) eq.coeffs[t.index] = eq.coeffs[t.index] + t.poly;
    while (eq.coeffs.size() > 1 && eq.coeffs.back().is_zero()) eq.coeffs.pop_back();
    eq.validate();
    return eq;
}

bool looks_like_line_style(const std::string& text, char& kind) {
    std::istringstream in(text);
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        std::size_t i = 0;
        while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
        if (i == line.size() || line[i] == '#') continue;
        if (line[i] != 'P' && line[i] != 'Q') return false;
        char k = line[i];
        ++i;
        if (i < line.size() && line[i] == '[') ++i;
        if (i >= line.size() || !std::isdigit((unsigned char)line[i])) return false;
        if (any && k != kind) return false;
        kind = k;
        any = true;
    }
    return any;
}

LinearDifferenceEquation parse_line_equation(const std::string& text, char kind) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, RatPoly>> entries;
    std::size_t offset = 0;
    int n = 0;
    while (std::getline(in, line)) {
        std::size_t base = offset;
        offset += line.size() + 1;
        std::size_t i = 0;
        while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
        if (i == line.size() || line[i] == '#') continue;
        ++i;  // P or Q
        bool bracket = i < line.size() && line[i] == '[';
        if (bracket) ++i;
        int j = 0;
        if (i >= line.size() || !std::isdigit((unsigned char)line[i]))
            throw ParseError(base + i, "expected coefficient index");
        while (i < line.size() && std::isdigit((unsigned char)line[i]))
            j = j * 10 + (line[i++] - '0');
        if (bracket) {
            if (i >= line.size() || line[i] != ']') throw ParseError(base + i, "expected ']'");
            ++i;
        }
        while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
        if (i >= line.size() || line[i] != '=') throw ParseError(base + i, "expected '='");
        ++i;
        std::string rhs = line.substr(i);
        EqLexer lx(rhs);
        RatPoly p = lx.eof() ? RatPoly() : poly_sum(lx);
        if (!lx.eof()) throw ParseError(base + i + lx.pos, "unexpected trailing input");
        entries.emplace_back(j, p);
        n = std::max(n, j);
    }
    LinearDifferenceEquation eq;
    eq.form = kind == 'Q' ? EqForm::Shift : EqForm::Difference;
    eq.coeffs.assign(n + 1, RatPoly());
    for (auto& [j, p] : entries) eq.coeffs[j] = eq.coeffs[j] + p;
    while (eq.coeffs.size() > 1 && eq.coeffs.back().is_zero()) eq.coeffs.pop_back();
    eq.validate();
    return eq;
}

}  // namespace

LinearDifferenceEquation parse_equation(const std::string& text) {
    char kind = 0;
    if (looks_like_line_style(text, kind)) return parse_line_equation(text, kind);
    return parse_expression_equation(text);
}

RatPoly parse_ratpoly(const std::string& text) {
    EqLexer lx(text);
    RatPoly p = poly_sum(lx);
    if (!lx.eof()) lx.fail("end of input");
    return p;
}

std::string equation_to_string(const LinearDifferenceEquation& eq) {
    std::string out;
    char marker = eq.form == EqForm::Shift ? 'S' : 'D';
    for (int j = (int)eq.coeffs.size() - 1; j >= 0; --j) {
        if (eq.coeffs[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + eq.coeffs[j].to_string() + ")*" + marker + std::to_string(j);
    }
    if (out.empty()) out = "(0)*" + std::string(1, marker) + "0";
    return out + " = 0";
}

}  // namespace nevdiff
