#ifndef JETALG_PHIMAP_HPP
#define JETALG_PHIMAP_HPP

#include "jetalg/mderiv.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jetalg {

// The monomial strata driving the explicit section of phi. Delta is every
// monomial of degree 1..m over the s(n+1) jet variables; the order-0 stratum
// collects the pure base monomials; stratum (i, j) collects the monomials
// x_i^(j) * (x_i^(0))^a_i * (x_{i+1}^(0))^a_{i+1} ... (x_s^(0))^a_s, i.e.
// exactly one jet factor, to the first power, with order-0 factors only at
// base indices >= i.
struct DeltaSets {
    int s = 1, n = 0, m = 1;
    std::vector<Monomial> all;
    std::vector<Monomial> order0;
    std::map<std::pair<int, int>, std::vector<Monomial>> strata;

    static DeltaSets build(int s, int n, int m);
};

// Classification of a single monomial into the strata above.
struct DeltaClass {
    enum Kind { Order0, Stratum, Other } kind = Other;
    int i = 0, j = 0; // set for Stratum
};
DeltaClass classify_delta(const Monomial& mono);

// phi: an order-m derivation D of A_n induces the B_n-valued order-m
// derivation a -> sum_j D(d_j(a)) t^j on the base ring. The returned object
// carries D so that evaluation on arbitrary base elements goes through D.
SeriesDeriv phi_apply(const MDeriv& d, const JetRing& ring);

// Pointwise evaluation of the induced derivation without materializing it.
Series phi_eval(const MDeriv& d, const Poly& f, const JetRing& ring);

// The explicit section of phi (characteristic zero): from the component
// tables of E builds D on A_n with
//   D(x^alpha) = E_0(base collapse)                     on the order-0 stratum,
//   D(x^alpha) = E_j(x_i^{a+1} x_{i+1}^{...} ...)/(a+1)  on stratum (i, j),
//   D(x^alpha) = 0                                      otherwise.
// Then phi_apply(phi_section(E)) agrees with E on all base monomials of
// degree 1..m.
MDeriv phi_section(const SeriesDeriv& e, const JetRing& ring);

// Kernel test for order-2 derivations of A_n over a univariate base:
// F_{e_j} = D(x^(j)) must vanish and the convolution sums
// sum_{i=0}^{j} D(x^(i) x^(j-i)) must vanish, for every j in 0..n.
struct KernelVerdict {
    bool member = false;
    std::string witness; // first failing condition when not a member
};
KernelVerdict kernel_membership_order2(const MDeriv& d);

// The recursive family of kernel elements over Q[x]:
//   D_0 = 0,  D_1 = (1/2) d^2/dx1^2,  D_2 = D_1 - (1/2) d^2/dx0 dx2,
//   D_k = D_{k-1} + d^2/dx0 dxk - d^2/dx1 dx{k-1}   (k >= 3),
// each built in operator form on A_k (variables x0..xk, written x^(0)..x^(k)).
MDeriv kernel_tower_level(int k);

// Whether the tower restricts compatibly: eval(level k) == eval(level j) on
// every monomial of degree <= 2 over x0..xj, for all j < k.
bool tower_compatibility_check(int k);

} // namespace jetalg

#endif
