#ifndef JETALG_JETRING_HPP
#define JETALG_JETRING_HPP

#include "jetalg/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jetalg {

// Descriptor of the order-n Hasse-Schmidt algebra A_n of a polynomial ring
// K[x_1..x_s], or of a quotient K[x_1..x_s]/I. Relations are generators of I
// in the base variables only; the induced jet ideal of A_n is generated by
// their jets d_j(f), 0 <= j <= n. No normal-form reduction is performed
// anywhere; quotient-sensitive checks exhibit explicit combinations.
struct JetRing {
    int s = 1;
    int n = 0;
    std::vector<Poly> relations;

    JetRing() = default;
    JetRing(int base_vars, int truncation, std::vector<Poly> rels = {});

    // Structural membership: every variable has base index <= s and
    // jet order <= n.
    bool contains(const Poly& f) const;
    bool contains(const Monomial& m) const;

    // True when f lives in the base ring (jet order 0 only).
    bool is_base_element(const Poly& f) const;

    JetRing base_ring() const { return JetRing(s, 0, relations); }

    std::vector<JetVar> variables() const { return jet_variables(s, n); }

    // The jets d_j(f) of every relation, for j = 0..n, in (relation, j) order.
    std::vector<Poly> jet_ideal_generators() const;

    // Line-oriented form: "ring s=<int> n=<int>" then "rel <poly>" lines.
    std::string str() const;
    static JetRing parse(std::string_view text);

    bool operator==(const JetRing& o) const = default;
};

// Element of the truncated ring B_n = A_n[t]/<t^{n+1}>: a vector of n+1
// polynomial coefficients of t^0..t^n. Multiplication truncates above t^n.
class Series {
public:
    explicit Series(int n) : coeffs_(static_cast<size_t>(n) + 1) {
        if (n < 0) throw std::invalid_argument("Series: need n >= 0");
    }

    explicit Series(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("Series: need n >= 0");
    }

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Poly& coeff(int j) const { return coeffs_.at(static_cast<size_t>(j)); }
    Poly& coeff(int j) { return coeffs_.at(static_cast<size_t>(j)); }

    bool is_zero() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);

    Series scaled(const Poly& f) const;
    Series scaled(const Rational& c) const;

    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    std::vector<Poly> coeffs_;
};

// A multi-index over the jet variables together with its derived data: the
// base collapse (summing exponents over jet orders) and the jet-order weight.
struct JetIndex {
    Monomial alpha;

    JetIndex() = default;
    explicit JetIndex(Monomial a) : alpha(std::move(a)) {}

    // The collapse to a base multi-index: component i sums the exponents of
    // x_i^(j) over all j. Returned as a monomial in the order-0 variables.
    Monomial collapsed() const;

    // The weight sum_i sum_j j * alpha_i^j.
    long weight() const;

    int degree() const { return alpha.degree(); }
};

// The j-th universal Hasse-Schmidt derivation d_j: A -> A_n.
// d_0 substitutes x_i -> x_i^(0) (the identity on our representation),
// d_j(x_i) = x_i^(j), extended k-linearly and by the convolution Leibniz
// rule d_j(fg) = sum_{a+b=j} d_a(f) d_b(g). Computed by structural
// recursion on monomials with a memo table; results are independent of the
// ring descriptor, which only bounds j and validates f.
Poly jet(const Poly& f, int j, const JetRing& ring);

// gamma_n^#: A -> B_n, f -> sum_j d_j(f) t^j. A ring homomorphism.
Series jet_series(const Poly& f, const JetRing& ring);

// Compositions of j into `parts` parts with no part equal to j. Empty for
// j = 0 (the all-zero composition has every part equal to j).
std::vector<std::vector<int>> proper_compositions(int j, int parts);

// The closed-form expansion of d_j(x^beta):
//   sum_i beta_i x_i^(j) x^(beta - e_i at order 0)  +  sum over proper
//   compositions gamma of the remainder monomials x^(gamma).
// At j = 0 only the zero composition contributes and the value is the single
// order-0 product term. beta is given as a monomial in the base variables.
Poly monomial_jet_expansion(const Monomial& beta, int j, const JetRing& ring);

// The jet multi-index alpha with x^(gamma) = x^alpha, where gamma assigns a
// jet order to each of the |beta| variable slots of x^beta.
JetIndex composition_to_index(const std::vector<int>& gamma, const Monomial& beta);

// Both sides of the commutation identity d^alpha o d_l = d_{l-weight} o
// d^collapse on the base ring: returns (partial(d_l(f), alpha),
// d_{l-weight}(partial(f, collapse))). Requires 0 <= weight <= l <= n;
// a weight exceeding l violates the hypothesis and throws std::domain_error.
std::pair<Poly, Poly> jet_partial_commutation(const JetIndex& alpha, int l, const Poly& f,
                                              const JetRing& ring);

} // namespace jetalg

#endif
