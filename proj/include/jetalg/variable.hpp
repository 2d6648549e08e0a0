#ifndef JETALG_VARIABLE_HPP
#define JETALG_VARIABLE_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace jetalg {

// A jet variable x_i^(j): base index i >= 1, jet order j >= 0.
// Base-ring variables are the order-0 jets; x_i is identified with x_i^(0).
// The (base, order) lexicographic order is the fixed variable order used
// everywhere (monomial ordering, factor lists, printing).
struct JetVar {
    int base = 1;
    int order = 0;

    JetVar() = default;
    JetVar(int base_index, int jet_order) : base(base_index), order(jet_order) {
        if (base < 1) throw std::invalid_argument("JetVar: base index must be >= 1");
        if (order < 0) throw std::invalid_argument("JetVar: jet order must be >= 0");
    }

    auto operator<=>(const JetVar&) const = default;

    std::string str() const {
        return "x" + std::to_string(base) + "^(" + std::to_string(order) + ")";
    }
};

} // namespace jetalg

#endif
