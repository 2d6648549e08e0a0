#include "jetalg/linsolve.hpp"

#include <stdexcept>

namespace jetalg {

void LinearSystem::add_row(std::vector<Rational> coeffs, Rational b) {
    if (coeffs.size() != unknowns)
        throw std::invalid_argument("LinearSystem: row width mismatch");
    rows.push_back(std::move(coeffs));
    rhs.push_back(std::move(b));
}

std::optional<std::vector<Rational>> solve(const LinearSystem& sys) {
    auto a = sys.rows;
    auto b = sys.rhs;
    const size_t n = sys.unknowns;
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < a.size(); ++col) {
        size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        Rational inv = 1 / a[row][col];
        for (size_t c = col; c < n; ++c) a[row][c] *= inv;
        b[row] *= inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[row][c];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t r = row; r < a.size(); ++r)
        if (b[r] != 0) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

} // namespace jetalg
