#pragma once

#include <optional>
#include <vector>

#include "sl2hecke/field.hpp"

namespace sl2hecke {

// Dense exact linear algebra over F_q, sized for the small systems that
// appear in the verification suites (a few hundred rows at most).

using FqVec = std::vector<Fq>;
using FqMat = std::vector<FqVec>;  // row-major

inline long mat_rank(FqMat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        Fq inv = m[row][col].inv();
        for (std::size_t j = col; j < cols; ++j) m[row][j] = inv * m[row][j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Fq f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Solves A x = b exactly; free variables are set to zero. Returns nullopt on
// inconsistency.
inline std::optional<FqVec> mat_solve(const FqMat& A, const FqVec& b, const FieldSpec& s) {
    std::size_t rows = A.size();
    std::size_t cols = rows == 0 ? 0 : A[0].size();
    FqMat m = A;
    FqVec rhs = b;
    std::vector<long> pivot_col(rows, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        Fq inv = m[row][col].inv();
        for (std::size_t j = col; j < cols; ++j) m[row][j] = inv * m[row][j];
        rhs[row] = inv * rhs[row];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Fq f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
            rhs[i] = rhs[i] - f * rhs[row];
        }
        pivot_col[row] = static_cast<long>(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;
    FqVec x(cols, Fq(s, 0));
    for (std::size_t i = 0; i < row; ++i)
        if (pivot_col[i] >= 0) x[static_cast<std::size_t>(pivot_col[i])] = rhs[i];
    return x;
}

}  // namespace sl2hecke
