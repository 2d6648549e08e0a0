#ifndef JETALG_PARSE_HPP
#define JETALG_PARSE_HPP

#include "jetalg/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetalg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          pos_(position) {}

    size_t position() const { return pos_; }

private:
    size_t pos_;
};

// Parses the polynomial grammar
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   coeff  := integer | integer '/' integer
//   factor := var ('^' integer)?
//   var    := 'x' index ( '^(' jetorder ')' )?
// where "x3" means x3^(0) and whitespace is ignored. When univariate_jets
// is set (rings with a single base variable), a bare "x3" instead denotes
// the jet variable x1^(3); the explicit form x1^(j) is always accepted.
Poly parse_poly(std::string_view text, bool univariate_jets = false);

// Parses a single monomial (a product of factors, no coefficient or sums).
Monomial parse_monomial(std::string_view text, bool univariate_jets = false);

// Inline spec texts may separate lines with '/'. A slash counts as a line
// break only when a space sits next to it, so rationals like 1/2 survive.
std::string normalize_spec_lines(std::string_view text);

} // namespace jetalg

#endif
