#ifndef JETALG_POLY_HPP
#define JETALG_POLY_HPP

#include "jetalg/monomial.hpp"
#include "jetalg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace jetalg {

// Sparse multivariate polynomial over Q in jet variables. Terms are a map
// Monomial -> nonzero Rational; zero coefficients are never stored, so
// structural equality is polynomial equality.
class Poly {
public:
    Poly() = default;

    explicit Poly(const Rational& c) {
        if (c != 0) terms_.emplace(Monomial::one(), c);
    }

    explicit Poly(long c) : Poly(Rational(c)) {}

    explicit Poly(const Monomial& m, const Rational& c = 1) {
        if (c != 0) terms_.emplace(m, c);
    }

    static Poly variable(JetVar v) { return Poly(Monomial::var(v)); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_term() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        // total degree; -1 for the zero polynomial
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    int max_jet_order() const {
        int m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_jet_order());
        return m;
    }

    int max_base_index() const {
        int m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_base_index());
        return m;
    }

    Poly& add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, c * k);
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r(Rational(1));
        Poly b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Single partial derivative d/dv.
    Poly partial(JetVar v) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (e > 0) r.add_term(m.without_one(v), c * e);
        }
        return r;
    }

    // Iterated partial derivative: the multi-index alpha is an exponent map.
    Poly partial(const Monomial& alpha) const {
        Poly r = *this;
        for (const auto& [v, e] : alpha.exponents())
            for (int i = 0; i < e && !r.is_zero(); ++i) r = r.partial(v);
        return r;
    }

    // Divided partial (1/alpha!) d^alpha, the Taylor coefficient operator.
    Poly divided_partial(const Monomial& alpha) const {
        Poly r = partial(alpha);
        if (r.is_zero()) return r;
        Integer fact = 1;
        for (const auto& [v, e] : alpha.exponents()) fact *= factorial(e);
        return r.scaled(Rational(Integer(1), fact));
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Canonical text form: terms in descending graded-lex order, positive
    // leading sign suppressed, unit coefficients elided.
    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

Poly operator*(const Rational& c, const Poly& p);

// All monomials of total degree 1..maxdeg in the given variables, in
// ascending graded-lex order, without duplicates.
std::vector<Monomial> monomials_up_to(const std::vector<JetVar>& vars, int maxdeg);

// Same, over the jet variables {x_i^(j) : 1 <= i <= s, 0 <= j <= n}.
std::vector<Monomial> monomials_up_to(int s, int n, int maxdeg);

std::vector<JetVar> jet_variables(int s, int n);

} // namespace jetalg

#endif
