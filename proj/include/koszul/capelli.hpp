#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "koszul/bitableaux.hpp"
#include "koszul/tableaux.hpp"
#include "koszul/uea.hpp"

namespace koszul {

/// Paired index columns [i_1..i_h | j_1..j_h] of equal depth.
struct ColumnPair {
    std::vector<int> left;
    std::vector<int> right;
};

namespace detail {

inline void check_column(const ColumnPair& c) {
    if (c.left.size() != c.right.size())
        throw std::invalid_argument("column pair: length mismatch");
}

template <bool Star>
UEAElement column_capelli_impl(const std::vector<int>& is, const std::vector<int>& js) {
    // Memoized on the exact index lists; row-commutativity is a verified
    // property, not an assumption baked into the key.
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, UEAElement> memo;
    const std::size_t h = is.size();
    if (h == 0) return UEAElement::unit();
    if (h == 1) return gen(is[0], js[0]);
    auto key = std::make_pair(is, js);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<int> ti(is.begin() + 1, is.end());
    std::vector<int> tj(js.begin() + 1, js.end());
    // Pick out the first row: a leading e_{i1 j1} times the tail, plus the
    // delta terms where some i_k = j_1 gets replaced by i_1.
    UEAElement out = multiply(gen(is[0], js[0]), column_capelli_impl<Star>(ti, tj));
    if constexpr (!Star) out = UEAElement::scale(parity_sign(static_cast<long long>(h) - 1), out);
    UEAElement deltas;
    for (std::size_t k = 1; k < h; ++k) {
        if (is[k] != js[0]) continue;
        auto si = ti;
        si[k - 1] = is[0];
        deltas += column_capelli_impl<Star>(si, tj);
    }
    if constexpr (Star)
        out -= deltas;
    else
        out += UEAElement::scale(parity_sign(static_cast<long long>(h) - 2), deltas);
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace detail

/// Column Capelli bitableau [i's | j's], computed by the first-row expansion
/// recursion; result in PBW normal form.
inline UEAElement column_capelli(const ColumnPair& c) {
    detail::check_column(c);
    return detail::column_capelli_impl<false>(c.left, c.right);
}
inline UEAElement column_capelli(const std::vector<int>& is, const std::vector<int>& js) {
    return column_capelli(ColumnPair{is, js});
}

/// Column Capelli *-bitableau [i's | j's]*: the unsigned recursion.
inline UEAElement column_capelli_star(const ColumnPair& c) {
    detail::check_column(c);
    return detail::column_capelli_impl<true>(c.left, c.right);
}
inline UEAElement column_capelli_star(const std::vector<int>& is, const std::vector<int>& js) {
    return column_capelli_star(ColumnPair{is, js});
}

namespace detail {

// Iterate over tuples (sigma_1, ..., sigma_m) of per-row permutations of S,
// handing each visitor the permuted row-major reading and the product sign.
template <class Visit>
void for_each_row_permutation(const Tableau& s, Visit visit) {
    const int m = s.row_count();
    std::vector<std::vector<std::pair<std::vector<int>, int>>> row_perms(
        static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        std::vector<int> idx(s.row(k).size());
        std::iota(idx.begin(), idx.end(), 0);
        do {
            int sign = 1;
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b)
                    if (idx[a] > idx[b]) sign = -sign;
            std::vector<int> permuted(idx.size());
            for (std::size_t p = 0; p < idx.size(); ++p)
                permuted[p] = s.row(k)[static_cast<std::size_t>(idx[p])];
            row_perms[static_cast<std::size_t>(k)].emplace_back(std::move(permuted), sign);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
    while (true) {
        std::vector<int> reading;
        int sign = 1;
        for (int k = 0; k < m; ++k) {
            const auto& [row, s_k] = row_perms[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]];
            reading.insert(reading.end(), row.begin(), row.end());
            sign *= s_k;
        }
        visit(reading, sign);
        if (m == 0) break;
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == row_perms[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
    }
}

}  // namespace detail

/// Capelli bitableau [S|T] by Laplace expansion: signed sum over per-row
/// permutations of S of the column Capelli bitableau of the long column.
inline UEAElement capelli_bitableau(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape())
        throw std::invalid_argument("capelli_bitableau: shape mismatch");
    const std::vector<int> right = t.reading();
    UEAElement out;
    detail::for_each_row_permutation(s, [&](const std::vector<int>& left, int sign) {
        out += UEAElement::scale(sign, column_capelli(left, right));
    });
    return out;
}

/// Capelli *-bitableau [S|T]*: same expansion, unsigned, over *-columns.
inline UEAElement star_capelli_bitableau(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape())
        throw std::invalid_argument("star_capelli_bitableau: shape mismatch");
    const std::vector<int> right = t.reading();
    UEAElement out;
    detail::for_each_row_permutation(s, [&](const std::vector<int>& left, int) {
        out += column_capelli_star(left, right);
    });
    return out;
}

/// Right Young-Capelli bitableau [S|box T]: sum of [S|Tbar] over all column
/// permutations of T, with multiplicity.
inline UEAElement right_young_capelli(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape())
        throw std::invalid_argument("right_young_capelli: shape mismatch");
    UEAElement out;
    for (const Tableau& tbar : column_permutations(t)) out += capelli_bitableau(s, tbar);
    return out;
}

/// Capelli column determinant: cdet of the generic e-matrix with diagonal
/// shifts n-1, n-2, ..., 0; products taken left to right by column.
inline UEAElement capelli_cdet(int n) {
    if (n < 1) throw std::invalid_argument("capelli_cdet: n must be positive");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    UEAElement out;
    do {
        int sign = 1;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) sign = -sign;
        UEAElement prod = UEAElement::unit();
        for (int c = 1; c <= n; ++c) {
            UEAElement factor = gen(perm[static_cast<std::size_t>(c - 1)], c);
            if (perm[static_cast<std::size_t>(c - 1)] == c)
                factor += UEAElement::constant(n - c);
            prod = multiply(prod, factor);
        }
        out += UEAElement::scale(sign, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// k-th Capelli element H_k(n): sum of row Capelli bitableaux
/// [i_k...i_1 | i_1...i_k] over the k-subsets of {1..n}. Central.
inline UEAElement capelli_H(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("capelli_H: k out of range");
    UEAElement out;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(subset.size()) == k) {
            std::vector<int> rev(subset.rbegin(), subset.rend());
            out += capelli_bitableau(Tableau({rev}), Tableau({subset}));
            return;
        }
        for (int v = next; v <= n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// h_k(n): the sum of all principal k x k minors of the generic matrix —
/// the degree-k coefficient of the characteristic polynomial, up to sign.
inline Poly poly_h(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("poly_h: k out of range");
    Poly out;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(subset.size()) == k) {
            out += detail::word_minor(subset, subset, true);
            return;
        }
        for (int v = next; v <= n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Shaped Capelli element K_lambda(n): sum of [S|S] over all row-increasing
/// tableaux S of the given shape with entries in {1..n}. Central.
inline UEAElement capelli_K(const Partition& shape, int n) {
    if (!shape.empty() && shape.part(0) > n)
        throw std::invalid_argument("capelli_K: first part exceeds n");
    UEAElement out;
    for (const Tableau& s : enumerate_row_increasing(shape, n))
        out += capelli_bitableau(s, s);
    return out;
}

/// det(tI - M) == t^n + sum_i (-1)^i h_i(n) t^{n-i}, expanded exactly.
inline bool char_poly_check(int n) {
    if (n < 1) throw std::invalid_argument("char_poly_check: n must be positive");
    // Coefficients of the characteristic polynomial by t-degree.
    std::vector<Poly> lhs(static_cast<std::size_t>(n) + 1);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int sign = 1;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) sign = -sign;
        // Product over rows r of entry (tI - M)[r, perm[r]].
        std::vector<Poly> prod{Poly::constant(sign)};
        for (int r = 1; r <= n; ++r) {
            const int c = perm[static_cast<std::size_t>(r - 1)];
            std::vector<Poly> next(prod.size() + 1);
            for (std::size_t d = 0; d < prod.size(); ++d) {
                next[d] += prod[d] * Poly::scale(-1, Poly::var(r, c));
                if (r == c) next[d + 1] += prod[d];
            }
            prod = std::move(next);
        }
        for (std::size_t d = 0; d < prod.size(); ++d) lhs[d] += prod[d];
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int d = 0; d <= n; ++d) {
        Poly expect = (d == n) ? Poly::one()
                               : Poly::scale(parity_sign(n - d), poly_h(n - d, n));
        if (lhs[static_cast<std::size_t>(d)] != expect) return false;
    }
    return true;
}

/// Centrality test: all adjoint operators T_hk vanish on m.
inline bool is_central(const UEAElement& m, int n) {
    for (int h = 1; h <= n; ++h)
        for (int k = 1; k <= n; ++k)
            if (!adjoint_T(h, k, m).is_zero()) return false;
    return true;
}

}  // namespace koszul
