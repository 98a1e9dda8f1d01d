#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "koszul/int.hpp"

namespace koszul {

using Rat = boost::multiprecision::cpp_rational;

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int integer_rank(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

/// Exact determinant of a square integer matrix (Bareiss).
inline Int integer_det(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(a[c], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

/// Exact solve A x = b over the rationals; std::nullopt when A is singular.
inline std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a,
                                                      std::vector<Rat> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Exact inverse by Gauss-Jordan; std::nullopt when singular.
inline std::optional<std::vector<std::vector<Rat>>> rational_inverse(
    std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(inv[c], inv[pivot]);
        const Rat p = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

inline Rat rational_det(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(a[c], a[pivot]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace koszul
