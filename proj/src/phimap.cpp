#include "jetalg/phimap.hpp"

#include <stdexcept>

namespace jetalg {

DeltaClass classify_delta(const Monomial& mono) {
    DeltaClass c;
    int jet_factors = 0;
    JetVar jet_var;
    int jet_exp = 0;
    int min_order0_base = 0;
    for (const auto& [v, e] : mono.exponents()) {
        if (v.order == 0) {
            if (min_order0_base == 0) min_order0_base = v.base;
            else min_order0_base = std::min(min_order0_base, v.base);
        } else {
            ++jet_factors;
            jet_var = v;
            jet_exp = e;
        }
    }
    if (jet_factors == 0) {
        c.kind = mono.is_one() ? DeltaClass::Other : DeltaClass::Order0;
        return c;
    }
    if (jet_factors == 1 && jet_exp == 1 &&
        (min_order0_base == 0 || min_order0_base >= jet_var.base)) {
        c.kind = DeltaClass::Stratum;
        c.i = jet_var.base;
        c.j = jet_var.order;
        return c;
    }
    return c;
}

DeltaSets DeltaSets::build(int s, int n, int m) {
    DeltaSets d;
    d.s = s;
    d.n = n;
    d.m = m;
    d.all = monomials_up_to(s, n, m);
    for (const auto& mono : d.all) {
        DeltaClass c = classify_delta(mono);
        if (c.kind == DeltaClass::Order0) d.order0.push_back(mono);
        else if (c.kind == DeltaClass::Stratum) d.strata[{c.i, c.j}].push_back(mono);
    }
    return d;
}

SeriesDeriv phi_apply(const MDeriv& d, const JetRing& ring) {
    if (!(d.domain() == ring))
        throw std::invalid_argument("phi_apply: derivation domain does not match the ring");
    JetRing base = ring.base_ring();
    std::vector<MDeriv> comps;
    comps.reserve(static_cast<size_t>(ring.n) + 1);
    for (int j = 0; j <= ring.n; ++j) {
        std::map<Monomial, Poly> table;
        for (const auto& mono : monomials_up_to(base.s, 0, d.order()))
            table.emplace(mono, d.eval(jet(Poly(mono), j, ring)));
        comps.emplace_back(d.order(), base, table);
    }
    SeriesDeriv e(d.order(), base, std::move(comps));
    e.set_jet_source(d, ring);
    return e;
}

Series phi_eval(const MDeriv& d, const Poly& f, const JetRing& ring) {
    Series out(ring.n);
    for (int j = 0; j <= ring.n; ++j) out.coeff(j) = d.eval(jet(f, j, ring));
    return out;
}

MDeriv phi_section(const SeriesDeriv& e, const JetRing& ring) {
    if (e.base().s != ring.s)
        throw std::invalid_argument("phi_section: base variable count mismatch");
    if (e.truncation() != ring.n)
        throw std::invalid_argument("phi_section: truncation mismatch");
    const int m = e.order();
    std::map<Monomial, Poly> table;
    for (const auto& mono : monomials_up_to(ring.s, ring.n, m)) {
        DeltaClass c = classify_delta(mono);
        if (c.kind == DeltaClass::Order0) {
            table.emplace(mono, e.component(0).value(mono));
        } else if (c.kind == DeltaClass::Stratum) {
            // Drop the jet factor, bump the matching base exponent, divide by
            // the bumped exponent.
            Monomial base = mono.without_one(JetVar(c.i, c.j));
            int a = base.exponent(JetVar(c.i, 0));
            Monomial target = base.times(Monomial::var(JetVar(c.i, 0)));
            Poly v = e.component(c.j).value(target).scaled(Rational(1, a + 1));
            table.emplace(mono, std::move(v));
        }
    }
    return MDeriv(m, ring, table);
}

KernelVerdict kernel_membership_order2(const MDeriv& d) {
    if (d.order() != 2)
        throw std::invalid_argument("kernel_membership_order2: need an order-2 derivation");
    if (d.domain().s != 1)
        throw std::invalid_argument("kernel_membership_order2: need a univariate base (s = 1)");
    const int n = d.domain().n;
    KernelVerdict verdict;
    for (int j = 0; j <= n; ++j) {
        Poly f = d.value(Monomial::var(JetVar(1, j)));
        if (!f.is_zero()) {
            verdict.witness = "D(x" + std::to_string(j) + ") = " + f.str() + " != 0";
            return verdict;
        }
    }
    for (int j = 0; j <= n; ++j) {
        Poly sum;
        for (int i = 0; i <= j; ++i)
            sum += d.value(Monomial::var(JetVar(1, i)).times(Monomial::var(JetVar(1, j - i))));
        if (!sum.is_zero()) {
            verdict.witness = "sum_{i=0}^{" + std::to_string(j) + "} D(x_i x_{" +
                              std::to_string(j) + "-i}) = " + sum.str() + " != 0";
            return verdict;
        }
    }
    verdict.member = true;
    return verdict;
}

MDeriv kernel_tower_level(int k) {
    if (k < 0) throw std::invalid_argument("kernel_tower_level: need k >= 0");
    JetRing domain(1, k);
    auto var = [](int j) { return Monomial::var(JetVar(1, j)); };
    std::vector<std::pair<Monomial, Rational>> spec;
    if (k >= 1) spec.emplace_back(var(1).times(var(1)), Rational(1, 2));
    if (k >= 2) spec.emplace_back(var(0).times(var(2)), Rational(-1, 2));
    for (int i = 3; i <= k; ++i) {
        spec.emplace_back(var(0).times(var(i)), Rational(1));
        spec.emplace_back(var(1).times(var(i - 1)), Rational(-1));
    }
    return MDeriv::from_partials(2, domain, spec);
}

bool tower_compatibility_check(int k) {
    if (k < 1) throw std::invalid_argument("tower_compatibility_check: need k >= 1");
    MDeriv dk = kernel_tower_level(k);
    for (int j = 0; j < k; ++j) {
        MDeriv dj = kernel_tower_level(j);
        for (const auto& mono : monomials_up_to(1, j, 2)) {
            Poly f(mono);
            if (!(dk.eval(f) == dj.eval(f))) return false;
        }
    }
    return true;
}

} // namespace jetalg
