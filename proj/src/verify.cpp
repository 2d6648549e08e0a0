#include "jetalg/verify.hpp"

#include "jetalg/diffmod.hpp"
#include "jetalg/phimap.hpp"
#include "jetalg/randgen.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace jetalg::verify {

namespace {

class Runner {
public:
    explicit Runner(std::string name) { res_.suite = std::move(name); }

    void check(bool ok, const std::function<Failure()>& describe) {
        ++res_.cases;
        if (ok) {
            ++res_.passed;
        } else {
            ++res_.failed;
            if (!res_.first_failure) res_.first_failure = describe();
        }
    }

    void check_equal(const Poly& actual, const Poly& expected, const std::string& inputs) {
        check(actual == expected,
              [&] { return Failure{inputs, expected.str(), actual.str()}; });
    }

    void check_equal(const Series& actual, const Series& expected, const std::string& inputs) {
        check(actual == expected,
              [&] { return Failure{inputs, expected.str(), actual.str()}; });
    }

    void check_true(bool ok, const std::string& inputs, const std::string& what) {
        check(ok, [&] { return Failure{inputs, what, "false"}; });
    }

    SuiteResult result() const { return res_; }

private:
    SuiteResult res_;
};

std::vector<JetVar> base_vars(int s) { return jet_variables(s, 0); }

// --- criterion 1: the Leibniz convolution rule for the universal jets ---

SuiteResult suite_leibniz(std::uint64_t seed) {
    Runner run("leibniz");
    Rng rng(seed);
    for (int c = 0; c < 300; ++c) {
        int s = rng.uniform(1, 3);
        int n = rng.uniform(0, 4);
        int j = rng.uniform(0, n);
        JetRing ring(s, n);
        Poly f = rng.poly(base_vars(s), 4, 3);
        Poly g = rng.poly(base_vars(s), 4, 3);
        Poly lhs = jet(f * g, j, ring);
        Poly rhs;
        for (int a = 0; a <= j; ++a) rhs += jet(f, a, ring) * jet(g, j - a, ring);
        run.check_equal(lhs, rhs,
                        "f=" + f.str() + "; g=" + g.str() + "; j=" + std::to_string(j) +
                            "; s=" + std::to_string(s) + "; n=" + std::to_string(n));
    }
    return run.result();
}

// --- criterion 2: closed-form jet expansion of a monomial power product ---

SuiteResult suite_jet_expansion(std::uint64_t) {
    Runner run("jet-expansion");
    for (int s = 1; s <= 3; ++s) {
        JetRing ring(s, 4);
        for (const auto& beta : monomials_up_to(s, 0, 5)) {
            for (int j = 0; j <= 4; ++j) {
                Poly expansion = monomial_jet_expansion(beta, j, ring);
                Poly direct = jet(Poly(beta), j, ring);
                run.check_equal(expansion, direct,
                                "beta=" + beta.str() + "; j=" + std::to_string(j));
            }
        }
    }
    return run.result();
}

// --- criterion 3: the s=2, n=1, m=2 section example, displayed evaluations ---

SuiteResult suite_worked_example(std::uint64_t seed) {
    Runner run("worked-example");
    Rng rng(seed);
    JetRing ring(2, 1);
    JetRing base = ring.base_ring();
    Poly x1 = Poly::variable(JetVar(1, 0));
    Poly x2 = Poly::variable(JetVar(2, 0));
    for (int round = 0; round < 20; ++round) {
        SeriesDeriv e = rng.series_deriv(2, base, 1);
        MDeriv d = phi_section(e, ring);
        SeriesDeriv lifted = phi_apply(d, ring);
        for (const Poly& f : {x1, x1 * x1, x1 * x2, x2, x2 * x2}) {
            run.check_equal(lifted.eval(f), e.eval(f), "f=" + f.str());
        }
        // the displayed jet-stratum table values
        auto e1 = [&](const Poly& f) { return e.component(1).eval(f); };
        run.check_equal(d.value(Monomial::var(JetVar(1, 1))), e1(x1), "D(x1^(1))");
        run.check_equal(d.value(Monomial::var(JetVar(1, 0)).times(Monomial::var(JetVar(1, 1)))),
                        e1(x1 * x1).scaled(Rational(1, 2)), "D(x1^(0)*x1^(1))");
        run.check_equal(d.value(Monomial::var(JetVar(1, 1)).times(Monomial::var(JetVar(2, 0)))),
                        e1(x1 * x2), "D(x1^(1)*x2^(0))");
    }
    return run.result();
}

// --- criterion 4: the lifted derivation satisfies the order-m identity ---

SuiteResult suite_series_nakai(std::uint64_t seed) {
    Runner run("series-nakai");
    Rng rng(seed);
    for (int c = 0; c < 100; ++c) {
        int m = (c % 2 == 0) ? 2 : 3;
        int s = rng.uniform(1, 2);
        int n = rng.uniform(0, 2);
        JetRing ring(s, n);
        MDeriv d = rng.rational_table_deriv(m, ring);
        auto eval = [&](const Poly& f) { return phi_eval(d, f, ring); };
        for (int t = 0; t < 20; ++t) {
            std::vector<Poly> xs;
            for (int i = 0; i <= m; ++i) xs.push_back(rng.poly(base_vars(s), 2, 2));
            bool ok = nakai_check_series(eval, xs, ring);
            run.check_true(ok, "m=" + std::to_string(m) + "; s=" + std::to_string(s) +
                                   "; n=" + std::to_string(n) + "; tuple " + std::to_string(t),
                           "series product identity");
        }
    }
    return run.result();
}

// --- criterion 5: the section is a right inverse on the monomial basis ---

SuiteResult suite_section(std::uint64_t seed) {
    Runner run("section");
    Rng rng(seed);
    const int combos[3][3] = {{1, 2, 2}, {2, 1, 2}, {2, 2, 3}};
    for (int c = 0; c < 100; ++c) {
        const auto& combo = combos[c % 3];
        int s = combo[0], n = combo[1], m = combo[2];
        JetRing ring(s, n);
        SeriesDeriv e = rng.series_deriv(m, ring.base_ring(), n);
        SeriesDeriv back = phi_apply(phi_section(e, ring), ring);
        for (const auto& mono : monomials_up_to(s, 0, m)) {
            Poly f(mono);
            run.check_equal(back.eval(f), e.eval(f),
                            "(s,n,m)=(" + std::to_string(s) + "," + std::to_string(n) + "," +
                                std::to_string(m) + "); monomial " + mono.str());
        }
    }
    return run.result();
}

// --- criterion 6: the order-2 kernel conditions match vanishing of the lift ---

SuiteResult suite_kernel_equiv(std::uint64_t seed) {
    Runner run("kernel-equiv");
    Rng rng(seed);
    Poly x = Poly::variable(JetVar(1, 0));
    for (int c = 0; c < 200; ++c) {
        int n = rng.uniform(0, 3);
        JetRing ring(1, n);
        std::map<Monomial, Rational> coeff;
        auto var = [](int j) { return Monomial::var(JetVar(1, j)); };
        for (int a = 0; a <= n; ++a) {
            coeff[var(a)] = rng.rational(3, 2);
            for (int b = a; b <= n; ++b) coeff[var(a).times(var(b))] = rng.rational(3, 2);
        }
        bool project = c % 2 == 0;
        if (project) {
            // zero the linear part and balance each convolution sum so the
            // result satisfies the kernel conditions
            for (int a = 0; a <= n; ++a) coeff[var(a)] = 0;
            for (int j = 0; j <= n; ++j) {
                Rational sum = 0;
                for (int i = 0; i <= j; ++i) {
                    Monomial key = var(std::min(i, j - i)).times(var(std::max(i, j - i)));
                    // D(x_i x_{j-i}) for the operator sum c_a d^a: equals
                    // c_{e_i+e_{j-i}} when i != j-i, 2 c when i = j-i
                    sum += (2 * i == j) ? 2 * coeff[key] : coeff[key];
                }
                coeff[var(0).times(var(j))] -= sum / 2;
            }
        }
        std::vector<std::pair<Monomial, Rational>> spec;
        for (const auto& [alpha, q] : coeff)
            if (q != 0) spec.emplace_back(alpha, q);
        MDeriv d = MDeriv::from_partials(2, ring, spec);
        bool member = kernel_membership_order2(d).member;
        bool vanishes =
            phi_eval(d, x, ring).is_zero() && phi_eval(d, x * x, ring).is_zero();
        run.check_true(member == vanishes,
                       "n=" + std::to_string(n) + "; case " + std::to_string(c) +
                           (project ? " (projected)" : " (raw)"),
                       "kernel conditions <=> lift vanishes on x, x^2");
    }
    return run.result();
}

// --- criterion 7: divided top-variable powers lie in the kernel ---

SuiteResult suite_top_power_kernel(std::uint64_t) {
    Runner run("top-power-kernel");
    for (int m : {2, 3}) {
        for (int n : {1, 2, 3}) {
            JetRing ring(1, n);
            Monomial alpha = Monomial::var(JetVar(1, n), m);
            MDeriv d = MDeriv::from_partials(
                m, ring, {{alpha, Rational(Integer(1), factorial(m))}});
            SeriesDeriv lifted = phi_apply(d, ring);
            bool ok = lifted.is_zero_on_basis();
            if (m == 2) ok = ok && kernel_membership_order2(d).member;
            run.check_true(ok, "m=" + std::to_string(m) + "; n=" + std::to_string(n),
                           "lift of (1/m!) d^m/dx_n^m vanishes");
        }
    }
    return run.result();
}

// --- criterion 8: the recursive kernel family over Q[x] ---

SuiteResult suite_kernel_tower(std::uint64_t) {
    Runner run("kernel-tower");
    auto var = [](int j) { return Monomial::var(JetVar(1, j)); };
    for (int k = 0; k <= 5; ++k) {
        MDeriv dk = kernel_tower_level(k);
        JetRing ring(1, k);
        run.check_true(phi_apply(dk, ring).is_zero_on_basis(), "k=" + std::to_string(k),
                       "lift vanishes");
        run.check_true(kernel_membership_order2(dk).member, "k=" + std::to_string(k),
                       "kernel conditions hold");
        if (k >= 1)
            run.check_true(tower_compatibility_check(k), "k=" + std::to_string(k),
                           "restriction compatibility on degree-<=2 monomials");
    }
    // the displayed convolution sums at levels 2 and 3
    MDeriv d2 = kernel_tower_level(2);
    Poly v02 = d2.value(var(0).times(var(2)));
    Poly v11 = d2.value(var(1).times(var(1)));
    run.check_equal(v02, Poly(Rational(-1, 2)), "D2(x0 x2)");
    run.check_equal(v11, Poly(Rational(1)), "D2(x1^2)");
    run.check_equal(v02.scaled(Rational(2)) + v11, Poly(), "2 D2(x0 x2) + D2(x1^2)");
    MDeriv d3 = kernel_tower_level(3);
    Poly v03 = d3.value(var(0).times(var(3)));
    Poly v12 = d3.value(var(1).times(var(2)));
    run.check_equal(v03, Poly(Rational(1)), "D3(x0 x3)");
    run.check_equal(v12, Poly(Rational(-1)), "D3(x1 x2)");
    run.check_equal(v03.scaled(Rational(2)) + v12.scaled(Rational(2)), Poly(),
                    "2 D3(x0 x3) + 2 D3(x1 x2)");
    return run.result();
}

// --- criterion 9: the order-2 closed formula and its module form ---

SuiteResult suite_order2_formula(std::uint64_t seed) {
    Runner run("order2-formula");
    Rng rng(seed);
    for (int c = 0; c < 50; ++c) {
        int s = (c % 2 == 0) ? 1 : 2;
        JetRing ring(s, 0);
        auto vars = ring.variables();
        std::map<Monomial, Poly> coeffs;
        for (const auto& alpha : monomials_up_to(s, 0, 2))
            coeffs.emplace(alpha, rng.poly(vars, 1, 2));
        OperatorDeriv op(2, ring, coeffs);
        MDeriv d = op.to_mderiv();
        for (const auto& beta : monomials_up_to(s, 0, 5)) {
            run.check_equal(d.eval(Poly(beta)), op.apply_order2(beta),
                            "table " + std::to_string(c) + "; beta=" + beta.str());
        }
    }
    // module form over the free presentation
    for (int s = 1; s <= 2; ++s) {
        JetRing ring(s, 0);
        for (const auto& beta : monomials_up_to(s, 0, 5)) {
            Poly xb(beta);
            ModuleElement lhs = canonical_dm(xb, 2, ring);
            ModuleElement rhs;
            Rational correction(2 - beta.degree());
            for (const auto& alpha : monomials_up_to(s, 0, 2)) {
                Poly delta = xb.divided_partial(alpha);
                if (delta.is_zero()) continue;
                ModuleElement dmx = canonical_dm(Poly(alpha), 2, ring);
                if (alpha.degree() == 2) rhs += dmx.scaled(delta);
                else rhs += dmx.scaled(delta.scaled(correction));
            }
            run.check(lhs == rhs, [&] {
                return Failure{"module form; s=" + std::to_string(s) + "; beta=" + beta.str(),
                               lhs.str(), rhs.str()};
            });
        }
    }
    return run.result();
}

// --- criterion 10: partials commute with jets through weight shifts ---

SuiteResult suite_commute(std::uint64_t seed) {
    Runner run("commute");
    Rng rng(seed);
    for (int c = 0; c < 300; ++c) {
        int s = rng.uniform(1, 2);
        int n = rng.uniform(1, 4);
        JetRing ring(s, n);
        auto vars = ring.variables();
        JetIndex alpha;
        long w = 0;
        do {
            int deg = (c % 3 == 0) ? 1 : rng.uniform(0, 3); // keep the |alpha|=1 corner hot
            alpha = JetIndex(rng.monomial(vars, deg, deg));
            w = alpha.weight();
        } while (w > n);
        int l = rng.uniform(static_cast<int>(w), n);
        Poly f = rng.poly(base_vars(s), 4, 3);
        auto [lhs, rhs] = jet_partial_commutation(alpha, l, f, ring);
        run.check_equal(lhs, rhs,
                        "alpha=" + alpha.alpha.str() + "; l=" + std::to_string(l) +
                            "; f=" + f.str() + "; n=" + std::to_string(n));
    }
    return run.result();
}

// --- criterion 11: the coordinate-axes counterexample certificates ---

SuiteResult suite_axes_example(std::uint64_t) {
    Runner run("axes-example");
    AxesExampleReport rep = verify_axes_example_certificate();
    run.check(rep.ok, [&] {
        return Failure{"axes certificate", "image, row and combination all match", rep.detail};
    });
    auto vars = jet_variables(2, 1);
    auto literal = bounded_membership(rep.f, axes_example_relations(false), vars, 2);
    run.check_true(!literal.has_value(), "relation rows only, degree <= 2",
                   "membership system infeasible");
    // Over quotient-ring coefficients the picture flips: with the ideal rows
    // included the element is an exact combination. Keep that finding pinned,
    // with the solution verified by substitution.
    auto rows = axes_example_relations(true);
    auto with_ideal = bounded_membership(rep.f, rows, vars, 2);
    bool sound = false;
    if (with_ideal) {
        TensorElement rebuilt;
        for (size_t i = 0; i < rows.size(); ++i) rebuilt += rows[i].scaled((*with_ideal)[i]);
        sound = rebuilt == rep.f;
    }
    run.check_true(with_ideal.has_value() && sound,
                   "relation plus coefficient-ideal rows, degree <= 2",
                   "exact combination exists and reconstructs the element");
    return run.result();
}

// --- criterion 12: the table extension is split-order independent ---

SuiteResult suite_nakai_permutation(std::uint64_t seed) {
    Runner run("nakai-permutation");
    Rng rng(seed);
    for (int c = 0; c < 200; ++c) {
        int m = (c % 2 == 0) ? 2 : 3;
        int s = rng.uniform(1, 2);
        int n = rng.uniform(0, 1);
        JetRing ring(s, n);
        MDeriv d = rng.rational_table_deriv(m, ring);
        Monomial mono = rng.monomial(ring.variables(), m + 4, m + 1);
        Poly canonical = d.eval(Poly(mono));
        auto factors = mono.factor_list();
        for (int p = 0; p < 2; ++p) {
            auto shuffled = factors;
            for (size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1],
                          shuffled[static_cast<size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
            run.check_equal(d.eval_with_factors(shuffled), canonical,
                            "monomial " + mono.str() + "; m=" + std::to_string(m) +
                                "; permutation " + std::to_string(p));
        }
    }
    return run.result();
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"leibniz", suite_leibniz},
        {"jet-expansion", suite_jet_expansion},
        {"worked-example", suite_worked_example},
        {"series-nakai", suite_series_nakai},
        {"section", suite_section},
        {"kernel-equiv", suite_kernel_equiv},
        {"top-power-kernel", suite_top_power_kernel},
        {"kernel-tower", suite_kernel_tower},
        {"order2-formula", suite_order2_formula},
        {"commute", suite_commute},
        {"axes-example", suite_axes_example},
        {"nakai-permutation", suite_nakai_permutation},
    };
    return reg;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

std::string suite_description(const std::string& name) {
    static const std::map<std::string, std::string> desc = {
        {"leibniz", "jet convolution Leibniz rule, 300 random (f, g, j)"},
        {"jet-expansion", "closed-form monomial jet expansion vs direct jets, exhaustive"},
        {"worked-example", "s=2 n=1 m=2 section example, displayed evaluations"},
        {"series-nakai", "lifted derivations satisfy the order-m identity, 100 x 20"},
        {"section", "section then lift is the identity on the monomial basis, 100 runs"},
        {"kernel-equiv", "order-2 kernel conditions equal vanishing of the lift, 200 runs"},
        {"top-power-kernel", "divided top-variable powers lift to zero"},
        {"kernel-tower", "recursive kernel family: lifts, conditions, displayed sums"},
        {"order2-formula", "order-2 closed formula matches the table extension; module form"},
        {"commute", "partials versus jets commutation with weight shift, 300 runs"},
        {"axes-example", "coordinate-axes certificates: image combination and non-membership"},
        {"nakai-permutation", "extension independent of the factor split order, 200 x 2"},
    };
    auto it = desc.find(name);
    return it == desc.end() ? std::string() : it->second;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    for (size_t i = 0; i < registry().size(); ++i) {
        const auto& [n, fn] = registry()[i];
        if (n == name) return fn(seed ^ (0x9E3779B97F4A7C15ull * (i + 1)));
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) out.push_back(run_suite(name, seed));
    return out;
}

} // namespace jetalg::verify
