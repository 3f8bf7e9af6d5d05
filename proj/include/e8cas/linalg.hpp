#ifndef E8CAS_LINALG_HPP
#define E8CAS_LINALG_HPP

#include "e8cas/rat.hpp"

#include <optional>
#include <vector>

namespace e8cas {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

struct LinearSolveResult {
    bool consistent = false;
    size_t rank = 0;
    /// A particular solution with all free variables set to zero
    /// (valid only when consistent).
    RatVector particular;
    /// True when the solution is unique (rank == number of unknowns).
    bool unique = false;
};

namespace detail {

/// In-place fractionless-pivot Gaussian elimination to row echelon form.
/// Returns pivot column per pivot row.
inline std::vector<size_t> row_echelon(RatMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

inline size_t matrix_rank(RatMatrix m) { return detail::row_echelon(m).size(); }

/// Solves A x = b exactly. Handles arbitrary shapes; reports rank,
/// consistency and uniqueness.
inline LinearSolveResult solve_linear_system(const RatMatrix& a, const RatVector& b) {
    LinearSolveResult res;
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) throw std::invalid_argument("solve_linear_system: shape mismatch");
    RatMatrix aug(rows, RatVector(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = detail::row_echelon(aug);
    res.rank = 0;
    res.consistent = true;
    for (size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == cols) { res.consistent = false; break; }
        ++res.rank;
    }
    if (!res.consistent) return res;
    res.particular.assign(cols, Rat(0));
    for (size_t k = 0; k < res.rank; ++k) res.particular[pivots[k]] = aug[k][cols];
    res.unique = (res.rank == cols);
    return res;
}

/// Unique-solution convenience wrapper; empty when the system is
/// singular or inconsistent.
inline std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
    auto res = solve_linear_system(a, b);
    if (!res.consistent || !res.unique) return std::nullopt;
    return res.particular;
}

} // namespace e8cas

#endif
