#include "simplex.hpp"

namespace cantor::detail {

Rational simplex_max(const std::vector<std::vector<Rational>>& M, const std::vector<Rational>& rhs,
                     const std::vector<Rational>& c) {
    const std::size_t m = M.size();
    const std::size_t n = c.size();
    for (const auto& row : M)
        if (row.size() != n) throw DomainError("simplex: ragged constraint matrix");
    if (rhs.size() != m) throw DomainError("simplex: right-hand side size mismatch");
    for (const auto& b : rhs)
        if (sgn(b) < 0) throw DomainError("simplex: negative right-hand side");

    // Columns: n structural variables, m slacks, then the right-hand side.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = M[i][j];
        tab[i][n + i] = 1;
        tab[i][width - 1] = rhs[i];
    }
    // Cost row holds reduced costs for maximization (negated objective
    // coefficients); its last entry accumulates the objective value.
    std::vector<Rational> cost(width, Rational(0));
    for (std::size_t j = 0; j < n; ++j) cost[j] = -c[j];
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland's rule: enter the lowest-index improving column.
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == width) return cost[width - 1];

        // Ratio test; ties broken by the lowest-index basic variable.
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tab[i][enter]) <= 0) continue;
            Rational ratio = tab[i][width - 1] / tab[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw DomainError("simplex: unbounded program");

        Rational pivot = tab[leave][enter];
        for (auto& x : tab[leave]) x /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(tab[i][enter]) == 0) continue;
            Rational factor = tab[i][enter];
            for (std::size_t j = 0; j < width; ++j) tab[i][j] -= factor * tab[leave][j];
        }
        if (sgn(cost[enter]) != 0) {
            Rational factor = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= factor * tab[leave][j];
        }
        basis[leave] = enter;
    }
}

}  // namespace cantor::detail
