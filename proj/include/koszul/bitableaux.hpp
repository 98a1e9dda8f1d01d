#pragma once

#include <stdexcept>
#include <vector>

#include "koszul/poly.hpp"
#include "koszul/tableaux.hpp"

namespace koszul {

namespace detail {

// Sum over permutations of det/per expansion; `signed_det` selects the sign.
inline Poly word_minor(const std::vector<int>& rows, const std::vector<int>& cols,
                       bool signed_det) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("biproduct: word length mismatch");
    const std::size_t p = rows.size();
    if (p == 0) return Poly::one();
    if (signed_det) {
        // A repeated letter repeats a row (or column) of the minor.
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = a + 1; b < p; ++b)
                if (rows[a] == rows[b] || cols[a] == cols[b]) return Poly::zero();
    }
    std::vector<int> perm(p);
    for (std::size_t k = 0; k < p; ++k) perm[k] = static_cast<int>(k);
    Poly out;
    do {
        int sign = 1;
        if (signed_det) {
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = a + 1; b < p; ++b)
                    if (perm[a] > perm[b]) sign = -sign;
        }
        std::vector<VarIndex> vars;
        vars.reserve(p);
        for (std::size_t r = 0; r < p; ++r)
            vars.push_back(VarIndex{rows[r], cols[static_cast<std::size_t>(perm[r])]});
        out.add_term(Monomial::from_vars(std::move(vars)), sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace detail

/// Signed minor (w|u) = (-1)^C(p,2) det[(i_r|j_s)]; zero on repeated letters.
inline Poly biproduct(const std::vector<int>& omega, const std::vector<int>& varpi) {
    Poly d = detail::word_minor(omega, varpi, true);
    return Poly::scale(parity_sign(choose2(static_cast<long long>(omega.size()))), d);
}

/// Permanent (w|u)* = per[(i_r|j_s)]; no sign, no vanishing on repeats.
inline Poly star_biproduct(const std::vector<int>& omega, const std::vector<int>& varpi) {
    return detail::word_minor(omega, varpi, false);
}

/// Sign accumulated when the rows of an equal-shape bitableau cross each
/// other: (-1)^{sum_{k>=2} l_k (l_1 + ... + l_{k-1})}.
inline int crossing_sign(const Partition& shape) {
    long long expo = 0, prefix = 0;
    for (int k = 0; k < shape.rows(); ++k) {
        if (k > 0) expo += static_cast<long long>(shape.part(k)) * prefix;
        prefix += shape.part(k);
    }
    return parity_sign(expo);
}

/// Determinantal Young bitableau (S|T): signed product of row biproducts.
inline Poly bitableau(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape()) throw std::invalid_argument("bitableau: shape mismatch");
    Poly out = Poly::constant(crossing_sign(s.shape()));
    for (int k = 0; k < s.row_count(); ++k) out *= biproduct(s.row(k), t.row(k));
    return out;
}

/// Permanental Young *-bitableau (S|T)*: plain product of row permanents.
inline Poly star_bitableau(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape()) throw std::invalid_argument("star_bitableau: shape mismatch");
    Poly out = Poly::one();
    for (int k = 0; k < s.row_count(); ++k) out *= star_biproduct(s.row(k), t.row(k));
    return out;
}

/// Right symmetrized bitableau (S|box T): sum of (S|Tbar) over all column
/// permutations of T, with multiplicity.
inline Poly symmetrized_bitableau(const Tableau& s, const Tableau& t) {
    if (s.shape() != t.shape())
        throw std::invalid_argument("symmetrized_bitableau: shape mismatch");
    Poly out;
    for (const Tableau& tbar : column_permutations(t)) out += bitableau(s, tbar);
    return out;
}

}  // namespace koszul
