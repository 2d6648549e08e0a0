#include "jetalg/diffmod.hpp"

#include "jetalg/linsolve.hpp"

#include <functional>
#include <stdexcept>

namespace jetalg {

ModuleElement& ModuleElement::add(const Monomial& symbol, const Poly& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = coeffs_.emplace(symbol, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    for (const auto& [sym, c] : o.coeffs_) add(sym, c);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
    for (const auto& [sym, c] : o.coeffs_) add(sym, -c);
    return *this;
}

ModuleElement ModuleElement::scaled(const Poly& f) const {
    ModuleElement r;
    if (f.is_zero()) return r;
    for (const auto& [sym, c] : coeffs_) r.coeffs_.emplace(sym, f * c);
    return r;
}

namespace {

std::string symbol_str(const Monomial& symbol) {
    if (symbol.is_one()) return "1";
    std::string s;
    for (const auto& [v, e] : symbol.exponents()) {
        if (!s.empty()) s += "*";
        s += "d" + v.str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string ModuleElement::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [sym, c] : coeffs_) {
        if (!out.empty()) out += "\n";
        out += "gen " + symbol_str(sym) + " : " + c.str();
    }
    return out;
}

ModuleElement canonical_dm(const Poly& f, int m, const JetRing& ring) {
    if (m < 1) throw std::invalid_argument("canonical_dm: order must be >= 1");
    if (!ring.contains(f)) throw std::invalid_argument("canonical_dm: element outside the ring");
    ModuleElement out;
    for (const auto& alpha : monomials_up_to(ring.s, ring.n, m))
        out.add(alpha, f.divided_partial(alpha));
    return out;
}

ModuleElement symbol_product(const Monomial& beta_symbol, const ModuleElement& e, int m) {
    ModuleElement out;
    for (const auto& [sym, c] : e.coeffs()) {
        Monomial prod = beta_symbol.times(sym);
        if (prod.degree() <= m) out.add(prod, c);
    }
    return out;
}

namespace {

DiffPresentation make_presentation(const JetRing& ring, int m, const std::vector<Poly>& rels) {
    DiffPresentation p;
    p.ring = ring;
    p.m = m;
    p.generators = monomials_up_to(ring.s, ring.n, m);
    std::vector<Monomial> betas;
    betas.push_back(Monomial::one());
    if (m >= 2) {
        auto higher = monomials_up_to(ring.s, ring.n, m - 1);
        betas.insert(betas.end(), higher.begin(), higher.end());
    }
    for (const auto& f : rels) {
        ModuleElement dm = canonical_dm(f, m, ring);
        for (const auto& beta : betas) p.relation_rows.push_back(symbol_product(beta, dm, m));
    }
    return p;
}

} // namespace

DiffPresentation DiffPresentation::base_presentation(const JetRing& ring, int m) {
    return make_presentation(ring.base_ring(), m, ring.relations);
}

DiffPresentation DiffPresentation::jet_presentation(const JetRing& ring, int m) {
    return make_presentation(ring, m, ring.jet_ideal_generators());
}

Integer DiffPresentation::free_rank(int vars, int m) {
    Integer r = 0;
    for (int d = 1; d <= m; ++d) r += binomial(vars + d - 1, d);
    return r;
}

TensorElement& TensorElement::add(const Monomial& symbol, int level, const Poly& c) {
    if (c.is_zero()) return *this;
    auto key = std::make_pair(symbol, level);
    auto [it, inserted] = parts_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) parts_.erase(it);
    }
    return *this;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [key, c] : o.parts_) add(key.first, key.second, c);
    return *this;
}

TensorElement TensorElement::scaled(const Poly& f) const {
    TensorElement r;
    if (f.is_zero()) return r;
    for (const auto& [key, c] : parts_) r.parts_.emplace(key, f * c);
    return r;
}

std::string TensorElement::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : parts_) {
        if (!out.empty()) out += "\n";
        out += "gen " + symbol_str(key.first) + "@t^-" + std::to_string(key.second) + " : " +
               c.str();
    }
    return out;
}

TensorElement tensor_lift(const ModuleElement& e, int level, const JetRing& ring) {
    if (level < 0 || level > ring.n) throw std::invalid_argument("tensor_lift: level out of range");
    TensorElement out;
    for (const auto& [sym, c] : e.coeffs())
        for (int k = 0; k <= level; ++k) out.add(sym, level - k, jet(c, k, ring));
    return out;
}

ModuleElement phi_vee_on_generator(const Poly& f, int j, int m, const JetRing& ring) {
    if (j < 0 || j > ring.n) throw std::invalid_argument("phi_vee_on_generator: level out of range");
    return canonical_dm(jet(f, j, ring), m, ring);
}

namespace {

void compositions(int total, int parts, std::vector<int>& current, size_t slot,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (slot + 1 == current.size()) {
        current[slot] = total;
        emit(current);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        current[slot] = v;
        compositions(total - v, parts, current, slot + 1, emit);
    }
}

} // namespace

ModuleElement phi_vee_on_symbol(const Monomial& alpha, int j, int m, const JetRing& ring) {
    if (alpha.max_jet_order() > 0)
        throw std::invalid_argument("phi_vee_on_symbol: symbol must be over base variables");
    int deg = alpha.degree();
    if (deg < 1 || deg > m)
        throw std::invalid_argument("phi_vee_on_symbol: symbol degree outside 1..m");
    if (j < 0 || j > ring.n) throw std::invalid_argument("phi_vee_on_symbol: level out of range");
    auto slots = alpha.factor_list();
    ModuleElement out;
    std::vector<int> current(slots.size(), 0);
    compositions(j, static_cast<int>(slots.size()), current, 0,
                 [&](const std::vector<int>& gamma) {
                     Monomial sym;
                     for (size_t l = 0; l < slots.size(); ++l)
                         sym = sym.times(Monomial::var(JetVar(slots[l].base, gamma[l])));
                     out.add(sym, Poly(Rational(1)));
                 });
    return out;
}

ModuleElement phi_vee(const TensorElement& e, int m, const JetRing& ring) {
    ModuleElement out;
    for (const auto& [key, c] : e.parts())
        out += phi_vee_on_symbol(key.first, key.second, m, ring).scaled(c);
    return out;
}

std::optional<std::vector<Poly>> bounded_membership(const TensorElement& target,
                                                    const std::vector<TensorElement>& relations,
                                                    const std::vector<JetVar>& vars,
                                                    int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("bounded_membership: need degree >= 0");
    std::vector<Monomial> mus;
    mus.push_back(Monomial::one());
    if (degree_bound >= 1) {
        auto higher = monomials_up_to(vars, degree_bound);
        mus.insert(mus.end(), higher.begin(), higher.end());
    }

    // Row index: one equation per (symbol, level, coefficient monomial).
    using RowKey = std::pair<std::pair<Monomial, int>, Monomial>;
    std::map<RowKey, size_t> row_of;
    auto row_index = [&](const std::pair<Monomial, int>& key, const Monomial& nu) {
        auto [it, inserted] = row_of.emplace(RowKey{key, nu}, row_of.size());
        return it->second;
    };

    struct Contribution {
        size_t col;
        size_t row;
        Rational value;
    };
    std::vector<Contribution> entries;
    const size_t ncols = relations.size() * mus.size();
    for (size_t r = 0; r < relations.size(); ++r) {
        for (size_t mi = 0; mi < mus.size(); ++mi) {
            size_t col = r * mus.size() + mi;
            for (const auto& [key, c] : relations[r].parts()) {
                Poly prod = Poly(mus[mi]) * c;
                for (const auto& [nu, q] : prod.terms())
                    entries.push_back({col, row_index(key, nu), q});
            }
        }
    }
    std::vector<std::pair<size_t, Rational>> rhs_entries;
    for (const auto& [key, c] : target.parts())
        for (const auto& [nu, q] : c.terms()) rhs_entries.emplace_back(row_index(key, nu), q);

    LinearSystem sys;
    sys.unknowns = ncols;
    sys.rows.assign(row_of.size(), std::vector<Rational>(ncols, Rational(0)));
    sys.rhs.assign(row_of.size(), Rational(0));
    for (const auto& e : entries) sys.rows[e.row][e.col] += e.value;
    for (const auto& [row, q] : rhs_entries) sys.rhs[row] += q;

    auto solution = solve(sys);
    if (!solution) return std::nullopt;
    std::vector<Poly> gs;
    gs.reserve(relations.size());
    for (size_t r = 0; r < relations.size(); ++r) {
        Poly g;
        for (size_t mi = 0; mi < mus.size(); ++mi)
            g.add_term(mus[mi], (*solution)[r * mus.size() + mi]);
        gs.push_back(std::move(g));
    }
    return gs;
}

namespace {

JetRing axes_ring() {
    Poly x1 = Poly::variable(JetVar(1, 0));
    Poly x2 = Poly::variable(JetVar(2, 0));
    return JetRing(2, 1, {x1 * x2});
}

} // namespace

std::vector<TensorElement> axes_example_relations(bool include_ideal_rows) {
    JetRing ring = axes_ring();
    const int m = 2;
    DiffPresentation base = DiffPresentation::base_presentation(ring, m);
    std::vector<TensorElement> rows;
    for (int level = 0; level <= ring.n; ++level)
        for (const auto& row : base.relation_rows)
            rows.push_back(tensor_lift(row, level, ring));
    if (include_ideal_rows) {
        for (const auto& f : ring.jet_ideal_generators())
            for (int level = 0; level <= ring.n; ++level)
                for (const auto& sym : base.generators)
                    rows.push_back(TensorElement::unit(sym, level).scaled(f));
    }
    return rows;
}

AxesExampleReport verify_axes_example_certificate() {
    AxesExampleReport rep;
    JetRing ring = axes_ring();
    const int m = 2;
    const Poly x10 = Poly::variable(JetVar(1, 0));
    const Poly x11 = Poly::variable(JetVar(1, 1));
    const Monomial dx1_0 = Monomial::var(JetVar(1, 0));
    const Monomial dx1_1 = Monomial::var(JetVar(1, 1));
    const Monomial dx2_0 = Monomial::var(JetVar(2, 0));
    const Monomial dx2_1 = Monomial::var(JetVar(2, 1));

    Poly f1 = jet(ring.relations[0], 0, ring);
    Poly f2 = jet(ring.relations[0], 1, ring);

    // F = 2 (dx2)^2 (x) x1^(0) x1^(1)  +  1/2 (dx2)^2 (x) (x1^(0))^2 t^{-1}
    Monomial dx2_sq = dx2_0.times(dx2_0); // the base-side symbol (d x2)^2
    rep.f.add(dx2_sq, 0, (x10 * x11).scaled(Rational(2)));
    rep.f.add(dx2_sq, 1, (x10 * x10).scaled(Rational(1, 2)));

    rep.image = phi_vee(rep.f, m, ring);

    ModuleElement expected_image;
    expected_image.add(dx2_0.times(dx2_0), (x10 * x11).scaled(Rational(2)));
    expected_image.add(dx2_0.times(dx2_1), x10 * x10);
    rep.image_matches = rep.image == expected_image;

    ModuleElement row1 = symbol_product(dx2_0, canonical_dm(f1, m, ring), m);
    ModuleElement row2 = symbol_product(dx2_0, canonical_dm(f2, m, ring), m);

    ModuleElement expected_row1;
    expected_row1.add(dx1_0.times(dx2_0), Poly::variable(JetVar(2, 0)));
    expected_row1.add(dx2_0.times(dx2_0), x10);
    rep.row_matches = row1 == expected_row1;

    // The displayed combination x1^(1) row1 + x1^(0) row2 differs from the
    // image exactly by jet-ideal multiples; exhibit the remainder.
    ModuleElement combination = row1.scaled(x11) + row2.scaled(x10);
    ModuleElement residual = combination - rep.image;
    ModuleElement remainder;
    remainder.add(dx1_0.times(dx2_0), f2);
    remainder.add(dx1_1.times(dx2_0), f1);
    rep.combination_matches = residual == remainder;

    rep.ok = rep.image_matches && rep.row_matches && rep.combination_matches;
    if (!rep.ok) rep.detail = "residual:\n" + (residual - remainder).str();
    return rep;
}

} // namespace jetalg
