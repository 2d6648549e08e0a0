#ifndef JETALG_MONOMIAL_HPP
#define JETALG_MONOMIAL_HPP

#include "jetalg/variable.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jetalg {

// A monomial in jet variables: a finite exponent map JetVar -> positive int,
// kept as a sorted vector. The empty map is the unit monomial. Monomials
// double as multi-indices (exponent vectors) for partial derivatives and
// differential-symbol products.
class Monomial {
public:
    using Entry = std::pair<JetVar, int>;

    Monomial() = default;

    explicit Monomial(std::vector<Entry> entries) {
        for (auto& [v, e] : entries) {
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
            if (e > 0) mul_var(v, e);
        }
    }

    static Monomial one() { return Monomial{}; }

    static Monomial var(JetVar v, int exp = 1) {
        Monomial m;
        if (exp > 0) m.exps_.emplace_back(v, exp);
        else if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
        return m;
    }

    bool is_one() const { return exps_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    int exponent(JetVar v) const {
        auto it = find(v);
        return it == exps_.end() ? 0 : it->second;
    }

    const std::vector<Entry>& exponents() const { return exps_; }

    Monomial times(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps_) r.mul_var(v, e);
        return r;
    }

    // Removes one factor of v; v must divide the monomial.
    Monomial without_one(JetVar v) const {
        Monomial r = *this;
        auto it = r.find(v);
        if (it == r.exps_.end()) throw std::invalid_argument("Monomial: variable not present");
        if (--it->second == 0) r.exps_.erase(it);
        return r;
    }

    // Componentwise quotient, or nothing when o does not divide this.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        Monomial r;
        auto it = exps_.begin();
        for (const auto& [v, e] : o.exps_) {
            while (it != exps_.end() && it->first < v) r.exps_.push_back(*it++);
            if (it == exps_.end() || it->first != v || it->second < e) return std::nullopt;
            if (it->second > e) r.exps_.emplace_back(v, it->second - e);
            ++it;
        }
        r.exps_.insert(r.exps_.end(), it, exps_.end());
        return r;
    }

    bool divides(const Monomial& o) const {
        return o.divided_by(*this).has_value();
    }

    // The variables with multiplicity, in the fixed variable order.
    std::vector<JetVar> factor_list() const {
        std::vector<JetVar> fs;
        fs.reserve(static_cast<size_t>(degree()));
        for (const auto& [v, e] : exps_)
            for (int i = 0; i < e; ++i) fs.push_back(v);
        return fs;
    }

    int max_jet_order() const {
        int m = 0;
        for (const auto& [v, e] : exps_) m = std::max(m, v.order);
        return m;
    }

    int max_base_index() const {
        int m = 0;
        for (const auto& [v, e] : exps_) m = std::max(m, v.base);
        return m;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    // Graded lexicographic: by total degree, ties broken lexicographically
    // on the exponent vector over the fixed variable order.
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        auto a = exps_.begin(), b = o.exps_.begin();
        while (a != exps_.end() && b != o.exps_.end()) {
            if (a->first != b->first) {
                // The earlier variable has a positive exponent on one side
                // only; that side is lex-greater.
                return b->first < a->first;
            }
            if (a->second != b->second) return a->second < b->second;
            ++a;
            ++b;
        }
        return false; // equal
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : exps_) {
            if (!s.empty()) s += "*";
            s += v.str();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Entry> exps_;

    std::vector<Entry>::iterator find(JetVar v) {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                                   [](const Entry& a, JetVar x) { return a.first < x; });
        return (it != exps_.end() && it->first == v) ? it : exps_.end();
    }
    std::vector<Entry>::const_iterator find(JetVar v) const {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                                   [](const Entry& a, JetVar x) { return a.first < x; });
        return (it != exps_.end() && it->first == v) ? it : exps_.end();
    }

    void mul_var(JetVar v, int e) {
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (e == 0) return;
        auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                                   [](const Entry& a, JetVar x) { return a.first < x; });
        if (it != exps_.end() && it->first == v) it->second += e;
        else exps_.insert(it, {v, e});
    }
};

} // namespace jetalg

#endif
