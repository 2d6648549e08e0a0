#include "jetalg/mderiv.hpp"

#include "jetalg/parse.hpp"

#include <sstream>

namespace jetalg {

MDeriv::MDeriv(int m, JetRing domain, const std::map<Monomial, Poly>& sparse_table)
    : m_(m), domain_(std::move(domain)) {
    if (m_ < 1) throw std::invalid_argument("MDeriv: order must be >= 1");
    for (const auto& [mono, val] : sparse_table) {
        int d = mono.degree();
        if (d < 1 || d > m_)
            throw std::invalid_argument("MDeriv: table key " + mono.str() +
                                        " has degree outside 1..m");
        if (!domain_.contains(mono))
            throw std::invalid_argument("MDeriv: table key " + mono.str() +
                                        " is outside the domain ring");
    }
    // Unspecified monomials are zero; after completion the table is total.
    for (const auto& mono : monomials_up_to(domain_.s, domain_.n, m_)) {
        auto it = sparse_table.find(mono);
        table_.emplace(mono, it == sparse_table.end() ? Poly() : it->second);
    }
}

MDeriv MDeriv::from_partials(int m, JetRing domain,
                             const std::vector<std::pair<Monomial, Rational>>& spec) {
    for (const auto& [alpha, c] : spec) {
        int d = alpha.degree();
        if (d < 1)
            throw std::invalid_argument("from_partials: |alpha| = 0 would not kill constants");
        if (d > m) throw std::invalid_argument("from_partials: |alpha| exceeds the order");
        if (!domain.contains(alpha))
            throw std::invalid_argument("from_partials: alpha outside the domain ring");
    }
    std::map<Monomial, Poly> table;
    for (const auto& mono : monomials_up_to(domain.s, domain.n, m)) {
        Poly v;
        Poly p(mono);
        for (const auto& [alpha, c] : spec) v += p.partial(alpha).scaled(c);
        table.emplace(mono, std::move(v));
    }
    MDeriv d(m, std::move(domain), table);
    d.op_spec_ = spec;
    return d;
}

const Poly& MDeriv::value(const Monomial& mono) const {
    auto it = table_.find(mono);
    if (it == table_.end())
        throw std::invalid_argument("MDeriv: no table entry for " + mono.str());
    return it->second;
}

bool MDeriv::is_zero() const {
    for (const auto& [mono, v] : table_)
        if (!v.is_zero()) return false;
    return true;
}

Poly MDeriv::eval(const Poly& f) const {
    if (!domain_.contains(f))
        throw std::invalid_argument("MDeriv::eval: argument outside the domain ring");
    Poly r;
    for (const auto& [mono, c] : f.terms()) {
        if (mono.is_one()) continue; // derivations kill constants
        r += eval_monomial(mono).scaled(c);
    }
    return r;
}

const Poly& MDeriv::eval_monomial(const Monomial& mono) const {
    int d = mono.degree();
    if (d <= m_) return value(mono);
    auto it = memo_.find(mono);
    if (it != memo_.end()) return it->second;
    auto factors = mono.factor_list();
    Poly r = nakai_split(factors);
    return memo_.emplace(mono, std::move(r)).first->second;
}

Poly MDeriv::eval_with_factors(std::span<const JetVar> factors) const {
    Monomial mono;
    for (JetVar v : factors) mono = mono.times(Monomial::var(v));
    if (mono.degree() <= m_) return value(mono);
    return nakai_split(factors);
}

// Split into m+1 factors: the first m variables singly, the remaining
// product as the last factor, then apply the order-m product identity. All
// complements have strictly smaller degree, so the recursion terminates.
Poly MDeriv::nakai_split(std::span<const JetVar> factors) const {
    const size_t k = static_cast<size_t>(m_) + 1;
    std::vector<Monomial> parts(k);
    for (size_t i = 0; i + 1 < k; ++i) parts[i] = Monomial::var(factors[i]);
    Monomial tail;
    for (size_t i = k - 1; i < factors.size(); ++i) tail = tail.times(Monomial::var(factors[i]));
    parts[k - 1] = tail;

    Poly result;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        Monomial kept, removed;
        int s = 0;
        for (size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                kept = kept.times(parts[i]);
                ++s;
            } else {
                removed = removed.times(parts[i]);
            }
        }
        Poly term = Poly(kept) * eval_monomial(removed);
        if (s % 2 == 1) result += term;
        else result -= term;
    }
    return result;
}

MDeriv MDeriv::scaled(const Poly& factor) const {
    MDeriv r(m_, domain_);
    for (const auto& [mono, v] : table_) r.table_[mono] = factor * v;
    return r;
}

MDeriv MDeriv::operator+(const MDeriv& o) const {
    if (m_ != o.m_ || !(domain_ == o.domain_))
        throw std::invalid_argument("MDeriv: order/domain mismatch in sum");
    MDeriv r(m_, domain_);
    for (const auto& [mono, v] : table_) r.table_[mono] = v + o.value(mono);
    return r;
}

std::string MDeriv::str() const {
    std::string out = "deriv m=" + std::to_string(m_);
    if (op_spec_) {
        for (const auto& [alpha, c] : *op_spec_) {
            std::string vars;
            for (const auto& v : alpha.factor_list()) {
                if (!vars.empty()) vars += ",";
                vars += v.str();
            }
            out += "\npartial " + vars + " " + c.get_str();
        }
        return out;
    }
    for (const auto& [mono, v] : table_) {
        if (v.is_zero()) continue;
        out += "\nvalue " + mono.str() + " " + v.str();
    }
    return out;
}

MDeriv MDeriv::parse(std::string_view text, const JetRing& domain) {
    std::istringstream in(normalize_spec_lines(text));
    std::string line;
    int m = -1;
    bool uni = domain.s == 1;
    std::vector<std::pair<Monomial, Rational>> partials;
    std::map<Monomial, Poly> values;
    bool any_value = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "deriv") {
            if (!(ls >> tok) || tok.rfind("m=", 0) != 0)
                throw std::invalid_argument("deriv spec: expected m=<int>");
            m = std::stoi(tok.substr(2));
        } else if (tok == "partial") {
            std::string vars, coeff;
            if (!(ls >> vars >> coeff)) throw std::invalid_argument("deriv spec: partial needs <vars> <coeff>");
            Monomial alpha;
            size_t start = 0;
            while (start <= vars.size()) {
                size_t comma = vars.find(',', start);
                std::string name = vars.substr(start, comma == std::string::npos ? std::string::npos
                                                                                 : comma - start);
                alpha = alpha.times(parse_monomial(name, uni));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            Rational c(coeff);
            c.canonicalize();
            partials.emplace_back(alpha, c);
        } else if (tok == "value") {
            std::string mono;
            if (!(ls >> mono)) throw std::invalid_argument("deriv spec: value needs <monomial> <poly>");
            std::string rest;
            std::getline(ls, rest);
            values.emplace(parse_monomial(mono, uni), parse_poly(rest, uni));
            any_value = true;
        } else {
            throw std::invalid_argument("deriv spec: unknown directive '" + tok + "'");
        }
    }
    if (m < 1) throw std::invalid_argument("deriv spec: missing deriv m=<int> header");
    if (!partials.empty() && any_value)
        throw std::invalid_argument("deriv spec: mixing partial and value lines is not supported");
    if (!partials.empty()) return from_partials(m, domain, partials);
    return MDeriv(m, domain, values);
}

bool nakai_check(const std::function<Poly(const Poly&)>& eval, const std::vector<Poly>& xs) {
    Poly residual = nakai_residual<Poly>(
        eval, [](const Poly& a, const Poly& v) { return a * v; }, xs);
    return residual.is_zero();
}

bool nakai_check_series(const std::function<Series(const Poly&)>& eval,
                        const std::vector<Poly>& xs, const JetRing& ring) {
    Series residual = nakai_residual<Series>(
        eval, [&](const Poly& a, const Series& v) { return jet_series(a, ring) * v; }, xs);
    return residual.is_zero();
}

OperatorDeriv::OperatorDeriv(int order, JetRing dom, std::map<Monomial, Poly> cs)
    : m(order), domain(std::move(dom)), coeffs(std::move(cs)) {
    if (m < 1) throw std::invalid_argument("OperatorDeriv: order must be >= 1");
    for (const auto& [alpha, c] : coeffs) {
        int d = alpha.degree();
        if (d < 1 || d > m)
            throw std::invalid_argument("OperatorDeriv: coefficient index outside 1..m");
        if (!domain.contains(alpha))
            throw std::invalid_argument("OperatorDeriv: index outside the domain ring");
    }
}

Poly OperatorDeriv::apply_order2(const Monomial& beta) const {
    if (m != 2) throw std::invalid_argument("apply_order2: operator form requires m = 2");
    Poly xb(beta);
    Poly out;
    Rational correction(2 - beta.degree());
    for (const auto& [alpha, f] : coeffs) {
        Poly delta = xb.divided_partial(alpha);
        if (delta.is_zero()) continue;
        if (alpha.degree() == 2) out += f * delta;
        else out += (f * delta).scaled(correction);
    }
    return out;
}

MDeriv OperatorDeriv::to_mderiv() const {
    if (m != 2) throw std::invalid_argument("to_mderiv: operator form requires m = 2");
    std::map<Monomial, Poly> table;
    for (const auto& mono : monomials_up_to(domain.s, domain.n, m))
        table.emplace(mono, apply_order2(mono));
    return MDeriv(m, domain, table);
}

bool order2_expansion_check(const Monomial& beta, const MDeriv& d) {
    if (d.order() != 2) throw std::invalid_argument("order2_expansion_check: need m = 2");
    if (beta.degree() < 1) throw std::invalid_argument("order2_expansion_check: need |beta| >= 1");
    Poly lhs = d.eval(Poly(beta));
    Poly xb(beta);
    Poly rhs;
    Rational correction(2 - beta.degree());
    for (const auto& [alpha, val] : d.table()) {
        Poly delta = xb.divided_partial(alpha);
        if (delta.is_zero()) continue;
        if (alpha.degree() == 2) rhs += delta * val;
        else rhs += (delta * val).scaled(correction);
    }
    return lhs == rhs;
}

SeriesDeriv::SeriesDeriv(int m, JetRing base, std::vector<MDeriv> components)
    : m_(m), base_(std::move(base)), components_(std::move(components)) {
    if (base_.n != 0)
        throw std::invalid_argument("SeriesDeriv: components live on the base ring (n = 0)");
    if (components_.empty()) throw std::invalid_argument("SeriesDeriv: need n+1 components");
    for (const auto& c : components_) {
        if (c.order() != m_) throw std::invalid_argument("SeriesDeriv: component order mismatch");
        if (!(c.domain() == base_))
            throw std::invalid_argument("SeriesDeriv: component domain mismatch");
    }
}

SeriesDeriv SeriesDeriv::zero(int m, const JetRing& base, int n) {
    std::vector<MDeriv> comps(static_cast<size_t>(n) + 1, MDeriv::zero(m, base));
    return SeriesDeriv(m, base, std::move(comps));
}

Series SeriesDeriv::eval(const Poly& f) const {
    Series out(truncation());
    if (jet_source_) {
        for (int j = 0; j <= truncation(); ++j)
            out.coeff(j) = jet_source_->eval(jet(f, j, *source_ring_));
        return out;
    }
    for (int j = 0; j <= truncation(); ++j) out.coeff(j) = component(j).eval(f);
    return out;
}

bool SeriesDeriv::equal_on_basis(const SeriesDeriv& o) const {
    if (m_ != o.m_ || components_.size() != o.components_.size() || !(base_ == o.base_))
        return false;
    for (size_t j = 0; j < components_.size(); ++j)
        if (!(components_[j].table() == o.components_[j].table())) return false;
    return true;
}

bool SeriesDeriv::is_zero_on_basis() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

SeriesDeriv SeriesDeriv::scaled(const Poly& factor) const {
    std::vector<MDeriv> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.scaled(factor));
    SeriesDeriv r(m_, base_, std::move(comps));
    if (jet_source_) r.set_jet_source(jet_source_->scaled(factor), *source_ring_);
    return r;
}

void SeriesDeriv::set_jet_source(MDeriv src, JetRing src_ring) {
    jet_source_ = std::move(src);
    source_ring_ = std::move(src_ring);
}

} // namespace jetalg
