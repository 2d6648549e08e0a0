#ifndef JETALG_MDERIV_HPP
#define JETALG_MDERIV_HPP

#include "jetalg/jetring.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jetalg {

// An order-m derivation given by its value table on the monomials of degree
// 1..m over the domain's variables. In characteristic zero such a table
// extends uniquely to an order-m derivation of the whole ring; eval performs
// the extension by applying the order-m product identity to a canonical
// (m+1)-factor split of higher-degree monomials, recursing on strictly
// smaller degree.
class MDeriv {
public:
    MDeriv(int m, JetRing domain, const std::map<Monomial, Poly>& sparse_table = {});

    static MDeriv zero(int m, JetRing domain) { return MDeriv(m, std::move(domain)); }

    // The derivation acting as the literal differential operator
    // sum c_alpha d^alpha (each 1 <= |alpha| <= m); kills constants and has
    // order <= m, so its monomial table is a valid order-m table.
    static MDeriv from_partials(int m, JetRing domain,
                                const std::vector<std::pair<Monomial, Rational>>& spec);

    int order() const { return m_; }
    const JetRing& domain() const { return domain_; }

    // Table value at a monomial of degree 1..m.
    const Poly& value(const Monomial& mono) const;
    const std::map<Monomial, Poly>& table() const { return table_; }

    // When built via from_partials, the operator coefficient list.
    const std::optional<std::vector<std::pair<Monomial, Rational>>>& operator_spec() const {
        return op_spec_;
    }

    Poly eval(const Poly& f) const;

    // Evaluation of a single monomial with an explicit factor order; used to
    // check that the extension does not depend on the canonical split.
    Poly eval_with_factors(std::span<const JetVar> factors) const;

    // The module action F.D: multiplies every value by F.
    MDeriv scaled(const Poly& factor) const;

    MDeriv operator+(const MDeriv& o) const;

    bool operator==(const MDeriv& o) const {
        return m_ == o.m_ && domain_ == o.domain_ && table_ == o.table_;
    }

    bool is_zero() const;

    // Serialization: "deriv m=<int>" followed by "partial <vars> <coeff>" or
    // "value <monomial> <poly>" lines.
    std::string str() const;
    static MDeriv parse(std::string_view text, const JetRing& domain);

private:
    int m_;
    JetRing domain_;
    std::map<Monomial, Poly> table_;
    std::optional<std::vector<std::pair<Monomial, Rational>>> op_spec_;
    mutable std::map<Monomial, Poly> memo_;

    const Poly& eval_monomial(const Monomial& mono) const;
    Poly nakai_split(std::span<const JetVar> factors) const;
};

// Residual of the order-m product identity for an (m+1)-tuple, for any
// module-valued evaluation: eval(x_0...x_m) minus the inclusion-exclusion
// sum over proper nonempty subsets. `act` is the module action of a ring
// element on a value. Zero residual means the identity holds for the tuple.
template <class Value, class Eval, class Act>
Value nakai_residual(Eval&& eval, Act&& act, const std::vector<Poly>& xs) {
    const size_t k = xs.size(); // m + 1 factors
    if (k < 2) throw std::invalid_argument("nakai_residual: need at least 2 elements");
    Poly full(Rational(1));
    for (const auto& x : xs) full *= x;
    Value residual = eval(full);
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        Poly kept(Rational(1)), removed(Rational(1));
        int s = 0;
        for (size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                kept *= xs[i];
                ++s;
            } else {
                removed *= xs[i];
            }
        }
        Value term = act(kept, eval(removed));
        if (s % 2 == 1) residual -= term;
        else residual += term;
    }
    return residual;
}

// The identity for a polynomial-valued evaluation map; the action is ring
// multiplication.
bool nakai_check(const std::function<Poly(const Poly&)>& eval, const std::vector<Poly>& xs);

inline bool nakai_check(const MDeriv& d, const std::vector<Poly>& xs) {
    if (xs.size() != static_cast<size_t>(d.order()) + 1)
        throw std::invalid_argument("nakai_check: tuple size must be m+1");
    return nakai_check([&](const Poly& f) { return d.eval(f); }, xs);
}

// The identity for a B_n-valued evaluation on the base ring, where a base
// element acts through gamma_n^# (series multiplication).
bool nakai_check_series(const std::function<Series(const Poly&)>& eval,
                        const std::vector<Poly>& xs, const JetRing& ring);

// Order-m derivation in operator form: coefficients F_alpha = D(x^alpha)
// for 1 <= |alpha| <= m. Only the m = 2 closed-form evaluation is provided:
//   D(x^beta) = sum_{|a|=2} F_a Delta_a(x^beta)
//             + (2-|beta|) sum_{|a|=1} F_a Delta_a(x^beta),
// with Delta_a the divided partial.
struct OperatorDeriv {
    int m = 2;
    JetRing domain;
    std::map<Monomial, Poly> coeffs;

    OperatorDeriv(int order, JetRing dom, std::map<Monomial, Poly> cs);

    Poly apply_order2(const Monomial& beta) const;

    // The table derivation with the same values on degree-1..m monomials.
    MDeriv to_mderiv() const;
};

// Checks the order-2 monomial expansion identity
//   D(x^beta) = sum_{|a|=2} Delta_a(x^beta) D(x^a)
//             + (2-|beta|) sum_{|a|=1} Delta_a(x^beta) D(x^a)
// with the left side computed by the table-extension evaluator.
bool order2_expansion_check(const Monomial& beta, const MDeriv& d);

// A B_n-valued order-m derivation on the base ring, E = sum E_j t^j, stored
// through its components' value tables on the base monomials of degree 1..m.
// When produced by the jet-algebra lift, evaluation goes through the source
// derivation (a -> sum D(d_j(a)) t^j); equality is always decided on the
// finite monomial basis.
class SeriesDeriv {
public:
    SeriesDeriv(int m, JetRing base, std::vector<MDeriv> components);

    static SeriesDeriv zero(int m, const JetRing& base, int n);

    int order() const { return m_; }
    int truncation() const { return static_cast<int>(components_.size()) - 1; }
    const JetRing& base() const { return base_; }

    const MDeriv& component(int j) const { return components_.at(static_cast<size_t>(j)); }

    Series eval(const Poly& f) const;

    bool equal_on_basis(const SeriesDeriv& o) const;
    bool is_zero_on_basis() const;

    SeriesDeriv scaled(const Poly& factor) const;

    void set_jet_source(MDeriv src, JetRing src_ring);
    const std::optional<MDeriv>& jet_source() const { return jet_source_; }

private:
    int m_;
    JetRing base_;
    std::vector<MDeriv> components_;
    std::optional<MDeriv> jet_source_;
    std::optional<JetRing> source_ring_;
};

} // namespace jetalg

#endif
