#pragma once

#include <optional>
#include <vector>

#include "ctr/errors.hpp"

namespace ctr {

// Exact Gaussian elimination over a field K.  Returns one solution of
// A x = b (minimal in the sense that free variables are set to zero), or
// nullopt when the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve_linear(std::vector<std::vector<K>> A,
                                           std::vector<K> b) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!A[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        K inv = A[r][c].inverse();
        for (int j = c; j < cols; ++j) A[r][j] = A[r][j] * inv;
        b[r] = b[r] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            K f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<K> x(cols);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

// Basis of the nullspace of A.
template <class K>
std::vector<std::vector<K>> nullspace(std::vector<std::vector<K>> A) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!A[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[p], A[r]);
        K inv = A[r][c].inverse();
        for (int j = c; j < cols; ++j) A[r][j] = A[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            K f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::vector<K>> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<K> v(cols);
        v[c] = K(1);
        for (int c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = -A[pivot_of_col[c2]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ctr
