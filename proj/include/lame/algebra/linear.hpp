#pragma once

#include <optional>
#include <vector>

#include "lame/algebra/mpoly.hpp"

namespace lame {

using RatMatrix = std::vector<std::vector<BigRat>>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        BigRat inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            BigRat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of the right null space.
inline std::vector<std::vector<BigRat>> nullspace(RatMatrix a, std::size_t cols) {
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<BigRat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<BigRat> v(cols, BigRat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Unique solution of A x = b, or nullopt if inconsistent or underdetermined.
inline std::optional<std::vector<BigRat>> solve_unique(const RatMatrix& a, const std::vector<BigRat>& b) {
    if (a.size() != b.size()) throw InvalidArgument("dimension mismatch");
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() != cols) return std::nullopt;
    std::vector<BigRat> x(cols);
    for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

}  // namespace lame
