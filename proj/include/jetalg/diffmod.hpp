#ifndef JETALG_DIFFMOD_HPP
#define JETALG_DIFFMOD_HPP

#include "jetalg/jetring.hpp"
#include "jetalg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jetalg {

// Element of the free module presenting the order-m Kahler differentials:
// a finite map from generator symbols (dx)^alpha (alpha an exponent map over
// the ring's variables, 1 <= |alpha| <= m) to polynomial coefficients.
class ModuleElement {
public:
    ModuleElement() = default;

    static ModuleElement unit(const Monomial& symbol) {
        ModuleElement e;
        e.coeffs_.emplace(symbol, Poly(Rational(1)));
        return e;
    }

    const std::map<Monomial, Poly>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    ModuleElement& add(const Monomial& symbol, const Poly& c);

    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

    ModuleElement scaled(const Poly& f) const;

    bool operator==(const ModuleElement& o) const { return coeffs_ == o.coeffs_; }

    // Lines "gen <symbol> : <poly>", symbols in ascending order, with the
    // d-prefix naming of the generators.
    std::string str() const;

private:
    std::map<Monomial, Poly> coeffs_;
};

// d^m(f) expanded over the generators: d^m(x^beta) = sum_{1<=|a|<=m}
// Delta_a(x^beta) (dx)^a with Delta_a the divided partial, extended
// linearly. Characteristic zero throughout.
ModuleElement canonical_dm(const Poly& f, int m, const JetRing& ring);

// Product with the symbol (dx)^beta in the symbol algebra truncated at
// symbol degree m: terms whose combined symbol degree exceeds m are dropped,
// matching the generator range of the presentation.
ModuleElement symbol_product(const Monomial& beta_symbol, const ModuleElement& e, int m);

// A finite presentation of the order-m differentials of `ring` modulo the
// given relation polynomials: generators (dx)^alpha for 1 <= |alpha| <= m,
// and one row (dx)^beta * d^m(f) per relation f and per |beta| <= m-1.
struct DiffPresentation {
    JetRing ring;
    int m = 1;
    std::vector<Monomial> generators;
    std::vector<ModuleElement> relation_rows;

    // For the base ring: rows from ring.relations. For the jet algebra: rows
    // from the jet ideal generators d_j(f).
    static DiffPresentation base_presentation(const JetRing& ring, int m);
    static DiffPresentation jet_presentation(const JetRing& ring, int m);

    // Free rank of the presentation for a polynomial ring on `vars`
    // variables: the number of exponent vectors with 1 <= |alpha| <= m.
    static Integer free_rank(int vars, int m);
};

// Element of the order-m differentials of the base ring tensored with the
// finite dual module: a map (symbol alpha over base variables, t-level j)
// -> coefficient in A_n.
class TensorElement {
public:
    TensorElement() = default;

    static TensorElement unit(const Monomial& symbol, int level) {
        TensorElement e;
        e.parts_.emplace(std::make_pair(symbol, level), Poly(Rational(1)));
        return e;
    }

    const std::map<std::pair<Monomial, int>, Poly>& parts() const { return parts_; }

    TensorElement& add(const Monomial& symbol, int level, const Poly& c);
    TensorElement& operator+=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    TensorElement scaled(const Poly& f) const;

    bool operator==(const TensorElement& o) const { return parts_ == o.parts_; }

    std::string str() const;

private:
    std::map<std::pair<Monomial, int>, Poly> parts_;
};

// Lift of a differential-module element with base-ring coefficients to the
// tensor module at level t^{-j}. Base coefficients act through the jet
// series, so a coefficient c spreads as sum_k d_k(c) at level t^{-(j-k)}.
TensorElement tensor_lift(const ModuleElement& e, int level, const JetRing& ring);

// The induced map on differentials, generator rule
//   d^m(f) (x) t^{-j}  ->  d^m_{A_n}(d_j(f)),
// i.e. canonical_dm of the j-th jet over the jet algebra.
ModuleElement phi_vee_on_generator(const Poly& f, int j, int m, const JetRing& ring);

// Image of a product symbol (dx)^alpha (x) t^{-j}: the jet convolution over
// the |alpha| factors, sum over compositions |gamma| = j of the symbols
// prod (d x_i^(gamma_l)).
ModuleElement phi_vee_on_symbol(const Monomial& alpha, int j, int m, const JetRing& ring);

// Linear extension over a tensor element (coefficients multiply through).
ModuleElement phi_vee(const TensorElement& e, int m, const JetRing& ring);

// Membership of `target` in the span of `relations` with polynomial
// multipliers of total degree <= degree_bound over `vars`: returns the
// multipliers (one per relation, in order) or nothing when the exact linear
// system is infeasible, certifying non-membership at this bound.
std::optional<std::vector<Poly>> bounded_membership(const TensorElement& target,
                                                    const std::vector<TensorElement>& relations,
                                                    const std::vector<JetVar>& vars,
                                                    int degree_bound);

// The worked counterexample over the coordinate-axes ring K[x1,x2]/(x1 x2)
// at n = 1, m = 2: checks that the image of the nonzero tensor element F is
// exactly the displayed combination of the relation rows (with the ideal
// remainder exhibited explicitly), so the image vanishes in the quotient.
struct AxesExampleReport {
    bool ok = false;
    bool image_matches = false;        // phi_vee(F) equals the displayed value
    bool row_matches = false;          // first relation row equals the displayed value
    bool combination_matches = false;  // combination - image is the exhibited ideal remainder
    std::string detail;                // residual printout on failure
    TensorElement f;                   // the element F
    ModuleElement image;               // phi_vee(F)
};
AxesExampleReport verify_axes_example_certificate();

// The relation rows of the axes example on the tensor side (f_beta at both
// t-levels), used for the bounded non-membership certificate of F != 0.
// With include_ideal_rows, rows f_i * unit(symbol, level) are appended so
// the certificate accounts for coefficients living in the quotient ring.
std::vector<TensorElement> axes_example_relations(bool include_ideal_rows);

} // namespace jetalg

#endif
