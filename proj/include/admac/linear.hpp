#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "admac/rational.hpp"

namespace admac {

/// Outcome of solving a small dense linear system by Gauss-Jordan
/// elimination over a ScalarLike field.
template <ScalarLike S>
struct LinearSolution {
    std::vector<S> values;
    bool underdetermined = false;  // at least one free variable was pinned to zero
};

/// Solves rows * x = rhs. Consistent underdetermined systems get their free
/// variables set to zero (one basic solution); inconsistent systems yield
/// nullopt. Column order matters to callers: earlier columns are pivoted
/// first, so free variables land on the later ones.
template <ScalarLike S>
std::optional<LinearSolution<S>> solve_linear_system(std::vector<std::vector<S>> rows,
                                                     std::vector<S> rhs) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != n) raise(ErrorCode::DimensionMismatch, "ragged linear system");
    if (rhs.size() != m) raise(ErrorCode::DimensionMismatch, "rhs size mismatch");

    const S zero = S::from_int(0);
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == m) continue;
        std::swap(rows[pivot], rows[rank]);
        std::swap(rhs[pivot], rhs[rank]);
        S inv = S::from_int(1) / rows[rank][col];
        for (std::size_t j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv;
        rhs[rank] = rhs[rank] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            S factor = rows[i][col];
            for (std::size_t j = col; j < n; ++j)
                rows[i][j] = rows[i][j] - factor * rows[rank][j];
            rhs[i] = rhs[i] - factor * rhs[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < m; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;

    LinearSolution<S> solution;
    solution.values.assign(n, zero);
    solution.underdetermined = rank < n;
    for (std::size_t i = 0; i < rank; ++i) {
        S value = rhs[i];
        // Free variables are zero, so only pivot columns contribute.
        for (std::size_t j = pivot_col[i] + 1; j < n; ++j)
            if (!rows[i][j].is_zero()) value = value - rows[i][j] * solution.values[j];
        solution.values[pivot_col[i]] = value;
    }
    return solution;
}

}  // namespace admac
