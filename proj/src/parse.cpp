#include "jetalg/parse.hpp"

#include <cctype>

namespace jetalg {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, bool univariate_jets)
        : text_(text), uni_(univariate_jets) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    long integer(const char* what) {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError(std::string("expected ") + what, start);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Rational coefficient() {
        Integer num(std::to_string(integer("integer")));
        if (accept('/')) {
            Integer den(std::to_string(integer("denominator")));
            if (den == 0) fail("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    JetVar variable() {
        skip_ws();
        size_t start = pos_;
        if (peek() != 'x') {
            if (std::isalpha(static_cast<unsigned char>(peek())))
                throw ParseError("unknown variable", start);
            fail("expected variable");
        }
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("unknown variable", start);
        long index = integer("variable index");
        // "x3^(1)" carries an explicit jet order; a '^' not followed by '('
        // belongs to the surrounding factor's exponent.
        if (peek() == '^') {
            size_t save = pos_;
            ++pos_;
            if (accept('(')) {
                long order = integer("jet order");
                if (order < 0) fail("jet order must be >= 0");
                if (!accept(')')) fail("expected ')'");
                if (index < 1) throw ParseError("unknown variable", start);
                return JetVar(static_cast<int>(index), static_cast<int>(order));
            }
            pos_ = save;
        }
        if (uni_) {
            // Univariate convention: x<k> is the k-th jet of the only base
            // variable.
            return JetVar(1, static_cast<int>(index));
        }
        if (index < 1) throw ParseError("unknown variable", start);
        return JetVar(static_cast<int>(index), 0);
    }

    // A factor: a variable power or a parenthesized subexpression.
    Poly factor() {
        if (peek() == '(') {
            ++pos_;
            Poly inner = poly();
            if (!accept(')')) fail("expected ')'");
            if (peek() == '^') {
                ++pos_;
                long e = integer("exponent");
                if (e < 0) fail("negative exponent");
                return inner.pow(static_cast<int>(e));
            }
            return inner;
        }
        JetVar v = variable();
        int exp = 1;
        if (peek() == '^') {
            ++pos_;
            long e = integer("exponent");
            if (e < 0) fail("negative exponent");
            exp = static_cast<int>(e);
        }
        return Poly(Monomial::var(v, exp));
    }

    // One signed term: returns the term as a Poly.
    Poly term(bool negative) {
        skip_ws();
        Poly acc;
        if (std::isdigit(static_cast<unsigned char>(peek()))) acc = Poly(coefficient());
        else acc = factor();
        while (accept('*')) acc *= factor();
        return negative ? -acc : acc;
    }

    Poly poly() {
        Poly result;
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        result += term(negative);
        while (!done() && peek() != ')') {
            if (accept('+')) negative = false;
            else if (accept('-')) negative = true;
            else fail("expected '+' or '-'");
            result += term(negative);
        }
        return result;
    }

private:
    std::string_view text_;
    bool uni_;
    size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, bool univariate_jets) {
    Cursor c(text, univariate_jets);
    if (c.done()) throw ParseError("empty input", 0);
    Poly p = c.poly();
    if (!c.done()) c.fail("unexpected ')'");
    return p;
}

Monomial parse_monomial(std::string_view text, bool univariate_jets) {
    Cursor c(text, univariate_jets);
    if (c.done()) throw ParseError("empty input", 0);
    Poly p = c.poly();
    if (p.terms().size() != 1 || p.terms().begin()->second != 1)
        throw ParseError("expected a monomial", 0);
    return p.terms().begin()->first;
}

std::string normalize_spec_lines(std::string_view text) {
    std::string out(text);
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i] != '/') continue;
        bool before = i == 0 || std::isspace(static_cast<unsigned char>(out[i - 1]));
        bool after = i + 1 == out.size() || std::isspace(static_cast<unsigned char>(out[i + 1]));
        if (before || after) out[i] = '\n';
    }
    return out;
}

} // namespace jetalg
