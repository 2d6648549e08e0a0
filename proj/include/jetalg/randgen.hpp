#ifndef JETALG_RANDGEN_HPP
#define JETALG_RANDGEN_HPP

#include "jetalg/mderiv.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace jetalg {

// Deterministic generator for randomized identity suites. Draws go through
// modular reduction of the raw engine output, not std::uniform_int_distribution,
// so identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    int uniform(int lo, int hi) { // inclusive
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(int max_num = 9, int max_den = 4) {
        Rational r(uniform(-max_num, max_num), uniform(1, max_den));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(int max_num = 9, int max_den = 4) {
        Rational r = rational(max_num, max_den);
        while (r == 0) r = rational(max_num, max_den);
        return r;
    }

    Monomial monomial(const std::vector<JetVar>& vars, int maxdeg, int mindeg = 0) {
        int deg = uniform(mindeg, maxdeg);
        Monomial m;
        for (int i = 0; i < deg; ++i)
            m = m.times(Monomial::var(vars[static_cast<size_t>(uniform(0, static_cast<int>(vars.size()) - 1))]));
        return m;
    }

    Poly poly(const std::vector<JetVar>& vars, int maxdeg, int maxterms = 4,
              bool allow_constant = true) {
        Poly p;
        int terms = uniform(1, maxterms);
        for (int i = 0; i < terms; ++i)
            p.add_term(monomial(vars, maxdeg, allow_constant ? 0 : 1), rational());
        return p;
    }

    // Random order-m derivation with constant rational values on every table
    // monomial.
    MDeriv rational_table_deriv(int m, const JetRing& domain) {
        std::map<Monomial, Poly> table;
        for (const auto& mono : monomials_up_to(domain.s, domain.n, m))
            table.emplace(mono, Poly(rational()));
        return MDeriv(m, domain, table);
    }

    // Random order-m derivation with small polynomial values.
    MDeriv poly_table_deriv(int m, const JetRing& domain, int value_deg = 2) {
        std::map<Monomial, Poly> table;
        auto vars = domain.variables();
        for (const auto& mono : monomials_up_to(domain.s, domain.n, m))
            table.emplace(mono, poly(vars, value_deg, 2));
        return MDeriv(m, domain, table);
    }

    SeriesDeriv series_deriv(int m, const JetRing& base, int n) {
        std::vector<MDeriv> comps;
        for (int j = 0; j <= n; ++j) comps.push_back(rational_table_deriv(m, base));
        return SeriesDeriv(m, base, std::move(comps));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace jetalg

#endif
