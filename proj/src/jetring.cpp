#include "jetalg/jetring.hpp"

#include "jetalg/parse.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace jetalg {

JetRing::JetRing(int base_vars, int truncation, std::vector<Poly> rels)
    : s(base_vars), n(truncation), relations(std::move(rels)) {
    if (s < 1) throw std::invalid_argument("JetRing: need s >= 1");
    if (n < 0) throw std::invalid_argument("JetRing: need n >= 0");
    for (const auto& r : relations) {
        if (r.max_jet_order() > 0)
            throw std::invalid_argument("JetRing: relations must use base variables only");
        if (r.max_base_index() > s)
            throw std::invalid_argument("JetRing: relation mentions a variable beyond s");
    }
}

bool JetRing::contains(const Monomial& m) const {
    return m.max_base_index() <= s && m.max_jet_order() <= n;
}

bool JetRing::contains(const Poly& f) const {
    return f.max_base_index() <= s && f.max_jet_order() <= n;
}

bool JetRing::is_base_element(const Poly& f) const {
    return f.max_base_index() <= s && f.max_jet_order() == 0;
}

std::vector<Poly> JetRing::jet_ideal_generators() const {
    std::vector<Poly> gens;
    gens.reserve(relations.size() * static_cast<size_t>(n + 1));
    for (const auto& f : relations)
        for (int j = 0; j <= n; ++j) gens.push_back(jet(f, j, *this));
    return gens;
}

std::string JetRing::str() const {
    std::string out = "ring s=" + std::to_string(s) + " n=" + std::to_string(n);
    for (const auto& r : relations) out += "\nrel " + r.str();
    return out;
}

JetRing JetRing::parse(std::string_view text) {
    // Accept newline- or '/'-separated lines; the leading "ring" tag is
    // optional.
    std::istringstream in(normalize_spec_lines(text));
    std::string line;
    int s = -1, n = -1;
    std::vector<Poly> rels;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "ring") {
            if (!(ls >> tok)) throw std::invalid_argument("ring descriptor: missing s=");
        }
        if (tok == "rel") {
            std::string rest;
            std::getline(ls, rest);
            rels.push_back(parse_poly(rest));
            continue;
        }
        // expect "s=<int>" then "n=<int>"
        auto read_kv = [&](const std::string& t, const char* key) {
            if (t.rfind(key, 0) != 0)
                throw std::invalid_argument(std::string("ring descriptor: expected ") + key +
                                            "<int>");
            return std::stoi(t.substr(2));
        };
        s = read_kv(tok, "s=");
        if (!(ls >> tok)) throw std::invalid_argument("ring descriptor: missing n=");
        n = read_kv(tok, "n=");
    }
    if (s < 0 || n < 0) throw std::invalid_argument("ring descriptor: missing s= or n=");
    return JetRing(s, n, std::move(rels));
}

bool Series::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Series& Series::operator+=(const Series& o) {
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("Series: truncation mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("Series: truncation mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        throw std::invalid_argument("Series: truncation mismatch");
    Series r(a.truncation());
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; i + j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
}

Series Series::scaled(const Poly& f) const {
    Series r(truncation());
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = f * coeffs_[i];
    return r;
}

Series Series::scaled(const Rational& c) const {
    Series r(truncation());
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].scaled(c);
    return r;
}

std::string Series::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[j].str() + ")";
        if (j == 1) s += "*t";
        else if (j > 1) s += "*t^" + std::to_string(j);
    }
    return s;
}

Monomial JetIndex::collapsed() const {
    Monomial m;
    for (const auto& [v, e] : alpha.exponents()) m = m.times(Monomial::var(JetVar(v.base, 0), e));
    return m;
}

long JetIndex::weight() const {
    long w = 0;
    for (const auto& [v, e] : alpha.exponents()) w += static_cast<long>(v.order) * e;
    return w;
}

namespace {

// Memoized Leibniz recursion for the jet of a base monomial: peel off one
// factor of the least variable and convolve. d_a(x_i) = x_i^(a).
const Poly& jet_monomial(const Monomial& m, int j) {
    thread_local std::map<std::pair<Monomial, int>, Poly> cache;
    auto key = std::make_pair(m, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Poly result;
    if (j == 0) {
        result = Poly(m);
    } else if (m.is_one()) {
        result = Poly(); // jets of constants vanish for j >= 1
    } else {
        JetVar v = m.exponents().front().first;
        Monomial rest = m.without_one(v);
        for (int a = 0; a <= j; ++a) {
            Poly head = Poly::variable(JetVar(v.base, a));
            result += head * jet_monomial(rest, j - a);
        }
    }
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

} // namespace

Poly jet(const Poly& f, int j, const JetRing& ring) {
    if (j < 0 || j > ring.n)
        throw std::invalid_argument("jet: order out of range 0.." + std::to_string(ring.n));
    if (f.max_jet_order() > 0)
        throw std::invalid_argument("jet: argument must be a base-ring element");
    if (f.max_base_index() > ring.s)
        throw std::invalid_argument("jet: argument mentions a variable beyond s");
    Poly result;
    for (const auto& [m, c] : f.terms()) result += jet_monomial(m, j).scaled(c);
    return result;
}

Series jet_series(const Poly& f, const JetRing& ring) {
    Series r(ring.n);
    for (int j = 0; j <= ring.n; ++j) r.coeff(j) = jet(f, j, ring);
    return r;
}

std::vector<std::vector<int>> proper_compositions(int j, int parts) {
    if (j < 0 || parts < 1)
        throw std::invalid_argument("proper_compositions: need j >= 0, parts >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<size_t>(parts), 0);
    // Enumerate compositions of j in lexicographic slot order and drop any
    // with a part equal to j (for j = 0 everything is dropped).
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == parts - 1) {
            if (remaining != j) {
                current[static_cast<size_t>(slot)] = remaining;
                out.push_back(current);
            }
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            if (v == j) continue;
            current[static_cast<size_t>(slot)] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    rec(rec, 0, j);
    return out;
}

JetIndex composition_to_index(const std::vector<int>& gamma, const Monomial& beta) {
    if (beta.max_jet_order() > 0)
        throw std::invalid_argument("composition_to_index: beta must be a base monomial");
    auto slots = beta.factor_list();
    if (slots.size() != gamma.size())
        throw std::invalid_argument("composition_to_index: composition has wrong length");
    Monomial alpha;
    for (size_t l = 0; l < slots.size(); ++l)
        alpha = alpha.times(Monomial::var(JetVar(slots[l].base, gamma[l])));
    return JetIndex(alpha);
}

Poly monomial_jet_expansion(const Monomial& beta, int j, const JetRing& ring) {
    if (beta.is_one() || beta.max_jet_order() > 0)
        throw std::invalid_argument("monomial_jet_expansion: need a base monomial of degree >= 1");
    if (j < 0 || j > ring.n) throw std::invalid_argument("monomial_jet_expansion: bad jet order");
    if (j == 0) return Poly(beta); // the single order-0 product term
    Poly result;
    for (const auto& [v, e] : beta.exponents()) {
        Monomial m = Monomial::var(JetVar(v.base, j)).times(beta.without_one(v));
        result.add_term(m, e);
    }
    for (const auto& gamma : proper_compositions(j, beta.degree()))
        result.add_term(composition_to_index(gamma, beta).alpha, 1);
    return result;
}

std::pair<Poly, Poly> jet_partial_commutation(const JetIndex& alpha, int l, const Poly& f,
                                              const JetRing& ring) {
    long w = alpha.weight();
    if (l < 0 || l > ring.n) throw std::invalid_argument("jet_partial_commutation: bad l");
    if (w > l)
        throw std::domain_error("jet_partial_commutation: index weight exceeds l, outside the "
                                "hypothesis 0 <= weight <= l");
    if (!ring.contains(alpha.alpha))
        throw std::invalid_argument("jet_partial_commutation: index outside the ring");
    Poly lhs = jet(f, l, ring).partial(alpha.alpha);
    Poly rhs = jet(f.partial(alpha.collapsed()), l - static_cast<int>(w), ring);
    return {lhs, rhs};
}

} // namespace jetalg
