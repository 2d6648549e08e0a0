#include "jetalg/poly.hpp"

#include <stdexcept>

namespace jetalg {

Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        Rational mag = abs(c);
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += m.str();
        }
    }
    return s;
}

std::vector<JetVar> jet_variables(int s, int n) {
    if (s < 1 || n < 0) throw std::invalid_argument("jet_variables: need s >= 1, n >= 0");
    std::vector<JetVar> vars;
    vars.reserve(static_cast<size_t>(s) * (n + 1));
    for (int i = 1; i <= s; ++i)
        for (int j = 0; j <= n; ++j) vars.emplace_back(i, j);
    return vars;
}

namespace {

void collect_monomials(const std::vector<JetVar>& vars, size_t idx, int budget,
                       Monomial current, std::vector<Monomial>& out) {
    if (!current.is_one()) out.push_back(current);
    if (budget == 0 || idx == vars.size()) return;
    for (size_t i = idx; i < vars.size(); ++i)
        collect_monomials(vars, i, budget - 1, current.times(Monomial::var(vars[i])), out);
}

} // namespace

std::vector<Monomial> monomials_up_to(const std::vector<JetVar>& vars, int maxdeg) {
    if (maxdeg < 1) throw std::invalid_argument("monomials_up_to: need maxdeg >= 1");
    std::vector<Monomial> out;
    collect_monomials(vars, 0, maxdeg, Monomial::one(), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Monomial> monomials_up_to(int s, int n, int maxdeg) {
    return monomials_up_to(jet_variables(s, n), maxdeg);
}

} // namespace jetalg
