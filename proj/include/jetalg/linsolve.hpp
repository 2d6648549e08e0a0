#ifndef JETALG_LINSOLVE_HPP
#define JETALG_LINSOLVE_HPP

#include "jetalg/rational.hpp"

#include <optional>
#include <vector>

namespace jetalg {

// Dense linear system over Q. Rows are equations a . x = b.
struct LinearSystem {
    size_t unknowns = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;

    void add_row(std::vector<Rational> coeffs, Rational b);
};

// One exact solution (free unknowns set to zero), or nothing when the
// system is inconsistent. Plain fraction-exact Gaussian elimination.
std::optional<std::vector<Rational>> solve(const LinearSystem& sys);

} // namespace jetalg

#endif
