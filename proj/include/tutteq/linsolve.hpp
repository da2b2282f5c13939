#ifndef TUTTEQ_LINSOLVE_HPP
#define TUTTEQ_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "tutteq/rational.hpp"

namespace tq {

struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
struct LinearSolution {
    bool consistent = true;
    std::vector<F> particular;              // empty vector = all zeros (homogeneous)
    std::vector<std::vector<F>> nullspace;  // basis vectors
};

/// Exact Gauss-Jordan elimination over the field F. Pivot choice: the
/// nonzero candidate of smallest complexity() to curb coefficient blowup.
/// With rhs absent the system is treated as homogeneous.
template <class F>
LinearSolution<F> solve_linear_exact(std::vector<std::vector<F>> m,
                                     std::optional<std::vector<F>> rhs = std::nullopt) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw dimension_error("solve_linear_exact: ragged matrix");
    std::vector<F> b(rows, F(0));
    if (rhs) {
        if (rhs->size() != rows)
            throw dimension_error("solve_linear_exact: rhs size does not match row count");
        b = *rhs;
    }

    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> col_used(cols, false);
    std::size_t rank = 0;
    for (std::size_t col_pass = 0; col_pass < cols && rank < rows; ++col_pass) {
        // pick pivot: smallest-complexity nonzero entry among unused columns
        std::size_t best_r = rows, best_c = cols;
        std::size_t best_cost = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (col_used[c]) continue;
            for (std::size_t r = rank; r < rows; ++r) {
                if (m[r][c] == F(0)) continue;
                std::size_t cost = complexity(m[r][c]);
                if (best_r == rows || cost < best_cost) {
                    best_r = r; best_c = c; best_cost = cost;
                }
            }
        }
        if (best_r == rows) break;
        std::swap(m[rank], m[best_r]);
        std::swap(b[rank], b[best_r]);
        col_used[best_c] = true;
        pivot_col_of_row.push_back(best_c);
        F inv = F(1) / m[rank][best_c];
        for (auto& v : m[rank]) v = v * inv;
        b[rank] = b[rank] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][best_c] == F(0)) continue;
            F f = m[r][best_c];
            for (std::size_t c = 0; c < cols; ++c)
                if (!(m[rank][c] == F(0))) m[r][c] = m[r][c] - f * m[rank][c];
            b[r] = b[r] - f * b[rank];
        }
        ++rank;
    }

    LinearSolution<F> out;
    for (std::size_t r = rank; r < rows; ++r) {
        if (!(b[r] == F(0))) {
            out.consistent = false;
            return out;
        }
    }
    out.particular.assign(cols, F(0));
    for (std::size_t r = 0; r < rank; ++r) out.particular[pivot_col_of_row[r]] = b[r];
    for (std::size_t c = 0; c < cols; ++c) {
        if (col_used[c]) continue;
        std::vector<F> v(cols, F(0));
        v[c] = F(1);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = -m[r][c];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

} // namespace tq

#endif
