#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetalg/mderiv.hpp"
#include "jetalg/parse.hpp"
#include "jetalg/randgen.hpp"

using namespace jetalg;

namespace {

Poly var(int base, int order = 0) { return Poly::variable(JetVar(base, order)); }

Monomial mono(std::string_view text, bool uni = false) { return parse_monomial(text, uni); }

// The order-2 table with D(x^2) = 1 and zero elsewhere; its extension is the
// divided second derivative.
MDeriv half_second_derivative(const JetRing& domain) {
    std::map<Monomial, Poly> table;
    table.emplace(mono("x1^2"), Poly(Rational(1)));
    return MDeriv(2, domain, table);
}

} // namespace

TEST_CASE("product identity on simple evaluation maps") {
    Poly x = var(1);
    // the zero map
    CHECK(nakai_check([](const Poly&) { return Poly(); }, {x, x + Poly(Rational(1))}));
    // an honest first-order derivation: d/dx
    auto ddx = [](const Poly& f) { return f.partial(JetVar(1, 0)); };
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        Poly f = rng.poly(jet_variables(1, 0), 3);
        Poly g = rng.poly(jet_variables(1, 0), 3);
        CHECK(nakai_check(ddx, {f, g}));
    }
    // half the second derivative has order 2, not order 1
    auto half_dd = [](const Poly& f) {
        return f.partial(Monomial::var(JetVar(1, 0), 2)).scaled(Rational(1, 2));
    };
    CHECK(nakai_check(half_dd, {x, x, x}));
    CHECK_FALSE(nakai_check(half_dd, {x, x}));
    CHECK_THROWS_AS(nakai_check(half_second_derivative(JetRing(1, 0)), {x, x}),
                    std::invalid_argument);
}

TEST_CASE("table extension on the divided square table") {
    JetRing domain(1, 0);
    MDeriv d = half_second_derivative(domain);
    Poly x = var(1);
    CHECK(d.eval(x * x * x) == x.scaled(Rational(3)));
    CHECK(d.eval(Poly(Rational(5))).is_zero());
    CHECK(d.eval(x).is_zero());
    // matches the literal operator on higher powers
    for (int l = 2; l <= 7; ++l) {
        Poly expect = x.pow(l).partial(Monomial::var(JetVar(1, 0), 2)).scaled(Rational(1, 2));
        CHECK(d.eval(x.pow(l)) == expect);
    }
    CHECK_THROWS_AS(d.eval(var(2)), std::invalid_argument);
}

TEST_CASE("table values on jets of powers vanish for the divided x1-square") {
    // D = (1/2) d^2/d(x^(1))^2 on the order-1 jet ring of Q[x]
    JetRing domain(1, 1);
    MDeriv d = MDeriv::from_partials(2, domain, {{mono("x1^(1)^2"), Rational(1, 2)}});
    Poly x = var(1);
    for (int l = 1; l <= 5; ++l) CHECK(d.eval(jet(x.pow(l), 1, domain)).is_zero());
}

TEST_CASE("from_partials") {
    JetRing domain(1, 0);
    MDeriv d = MDeriv::from_partials(2, domain, {{mono("x1^2"), Rational(1, 2)}});
    CHECK(d.value(mono("x1")).is_zero());
    CHECK(d.value(mono("x1^2")) == Poly(Rational(1)));
    CHECK(d == half_second_derivative(domain));

    MDeriv zero = MDeriv::from_partials(2, domain, {});
    CHECK(zero.is_zero());

    CHECK_THROWS_AS(MDeriv::from_partials(2, domain, {{Monomial::one(), Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MDeriv::from_partials(1, domain, {{mono("x1^2"), Rational(1)}}),
                    std::invalid_argument);
}

TEST_CASE("from_partials consistency with the literal operator") {
    Rng rng(42);
    for (int i = 0; i < 25; ++i) {
        int s = rng.uniform(1, 2), n = rng.uniform(0, 1);
        int m = rng.uniform(2, 3);
        JetRing domain(s, n);
        auto vars = domain.variables();
        std::vector<std::pair<Monomial, Rational>> spec;
        int k = rng.uniform(1, 3);
        for (int t = 0; t < k; ++t)
            spec.emplace_back(rng.monomial(vars, m, 1), rng.rational(3, 2));
        MDeriv d = MDeriv::from_partials(m, domain, spec);
        for (int r = 0; r < 5; ++r) {
            Poly f = rng.poly(vars, m + 3);
            Poly direct;
            for (const auto& [alpha, c] : spec) direct += f.partial(alpha).scaled(c);
            CHECK(d.eval(f) == direct);
        }
    }
}

TEST_CASE("extension is linear and satisfies the identity globally") {
    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
        int m = rng.uniform(2, 3);
        int s = rng.uniform(1, 2);
        JetRing domain(s, 0);
        MDeriv d = rng.rational_table_deriv(m, domain);
        auto vars = domain.variables();
        Poly f = rng.poly(vars, 4), g = rng.poly(vars, 4);
        Rational a = rng.rational(), b = rng.rational();
        CHECK(d.eval(f.scaled(a) + g.scaled(b)) == d.eval(f).scaled(a) + d.eval(g).scaled(b));
        std::vector<Poly> xs;
        for (int t = 0; t <= m; ++t) xs.push_back(rng.poly(vars, 2, 2));
        CHECK(nakai_check(d, xs));
    }
}

TEST_CASE("extension does not depend on the factor split") {
    Rng rng(9);
    for (int i = 0; i < 30; ++i) {
        int m = rng.uniform(2, 3);
        JetRing domain(2, 0);
        MDeriv d = rng.poly_table_deriv(m, domain, 1);
        Monomial mn = rng.monomial(domain.variables(), m + 3, m + 1);
        Poly canonical = d.eval(Poly(mn));
        auto factors = mn.factor_list();
        for (int p = 0; p < 2; ++p) {
            for (size_t k = factors.size(); k > 1; --k)
                std::swap(factors[k - 1],
                          factors[static_cast<size_t>(rng.uniform(0, static_cast<int>(k) - 1))]);
            CHECK(d.eval_with_factors(factors) == canonical);
        }
    }
}

TEST_CASE("order-2 operator form") {
    JetRing domain(1, 0);
    std::map<Monomial, Poly> coeffs;
    coeffs.emplace(mono("x1^2"), Poly(Rational(1)));
    OperatorDeriv op(2, domain, coeffs);
    CHECK(op.apply_order2(mono("x1^3")) == var(1).scaled(Rational(3)));
    CHECK(op.apply_order2(mono("x1^2")) == Poly(Rational(1)));
    CHECK(op.apply_order2(mono("x1")).is_zero());

    // beta = e_i picks out the linear coefficient
    JetRing domain2(2, 0);
    std::map<Monomial, Poly> coeffs2;
    coeffs2.emplace(mono("x1"), var(2));
    coeffs2.emplace(mono("x1*x2"), Poly(Rational(3)));
    OperatorDeriv op2(2, domain2, coeffs2);
    CHECK(op2.apply_order2(mono("x1")) == var(2));
    // |beta| = 2 reduces to the pure quadratic sum
    CHECK(op2.apply_order2(mono("x1*x2")) == Poly(Rational(3)));

    OperatorDeriv op1(1, domain, {});
    CHECK_THROWS_AS(op1.apply_order2(mono("x1")), std::invalid_argument);
    CHECK_THROWS_AS(op1.to_mderiv(), std::invalid_argument);
}

TEST_CASE("order-2 monomial expansion identity") {
    Rng rng(10);
    for (int i = 0; i < 20; ++i) {
        int s = rng.uniform(1, 2);
        JetRing domain(s, 0);
        MDeriv d = rng.rational_table_deriv(2, domain);
        for (const auto& beta : monomials_up_to(s, 0, 5))
            CHECK(order2_expansion_check(beta, d));
    }
    // the beta = (4) value against the divided second derivative
    JetRing domain(1, 0);
    MDeriv d = half_second_derivative(domain);
    CHECK(d.eval(var(1).pow(4)) == (var(1) * var(1)).scaled(Rational(6)));
    CHECK(order2_expansion_check(mono("x1^4"), d));
}

TEST_CASE("derivation spec parsing") {
    JetRing ring(1, 2);
    MDeriv d = MDeriv::parse("deriv m=2 / partial x2,x2 1/2", ring);
    CHECK(d.order() == 2);
    CHECK(d.value(mono("x2^2", true)) == Poly(Rational(1)));
    CHECK(d.value(mono("x0^2", true)).is_zero());

    MDeriv round = MDeriv::parse(d.str(), ring);
    CHECK(round == d);

    JetRing ring2(2, 0);
    MDeriv v = MDeriv::parse("deriv m=2\nvalue x1^2 x2\nvalue x1*x2 1", ring2);
    CHECK(v.value(mono("x1^2")) == var(2));
    CHECK(v.value(mono("x1*x2")) == Poly(Rational(1)));
    CHECK(MDeriv::parse(v.str(), ring2) == v);

    CHECK_THROWS_AS(MDeriv::parse("partial x1 1", ring), std::invalid_argument);
    CHECK_THROWS_AS(MDeriv::parse("deriv m=0", ring), std::invalid_argument);
}

TEST_CASE("series-valued derivations") {
    JetRing base(2, 0);
    Rng rng(11);
    SeriesDeriv e = rng.series_deriv(2, base, 1);
    CHECK(e.truncation() == 1);
    Poly f = var(1) * var(2);
    Series value = e.eval(f);
    CHECK(value.coeff(0) == e.component(0).eval(f));
    CHECK(value.coeff(1) == e.component(1).eval(f));

    CHECK(SeriesDeriv::zero(2, base, 1).is_zero_on_basis());
    CHECK_FALSE(e.equal_on_basis(SeriesDeriv::zero(2, base, 1)));

    Poly factor = var(1) + Poly(Rational(2));
    SeriesDeriv scaled = e.scaled(factor);
    CHECK(scaled.eval(f).coeff(0) == factor * value.coeff(0));
}
