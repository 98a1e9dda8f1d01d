#pragma once

#include "koszul/capelli.hpp"
#include "koszul/poly.hpp"
#include "koszul/uea.hpp"

namespace koszul {

/// The Koszul map K : U(gl(n)) -> C[M_nn]. A PBW monomial e_{i1j1}...e_{ihjh}
/// goes to rho_{i1j1}(rho_{i2j2}(...rho_{ihjh}(1)...)): rightmost generator
/// applied first, so K(e_ij P) = rho_ij(K(P)). Extended linearly.
inline Poly koszul_map(const UEAElement& m) {
    Poly out;
    for (const auto& [mono, c] : m.terms()) {
        Poly cur = Poly::one();
        const auto word = mono.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = rho(it->row, it->col, cur);
        out += Poly::scale(c, cur);
    }
    return out;
}

/// The inverse B = K^{-1}, defined on the monomial basis: a degree-h monomial
/// with variable list (i_1|j_1)...(i_h|j_h) in canonical order maps to
/// (-1)^C(h,2) times the column Capelli bitableau of that list.
inline UEAElement inverse_koszul(const Poly& p) {
    UEAElement out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> is, js;
        for (const VarIndex& v : m.expanded()) {
            is.push_back(v.row);
            js.push_back(v.col);
        }
        const int sign = parity_sign(choose2(static_cast<long long>(is.size())));
        out += UEAElement::scale(Int(c) * sign, column_capelli(is, js));
    }
    return out;
}

/// Equivariance of K with respect to the two adjoint actions:
/// K(T_hk(m)) must equal (Dl_hk - Dr_kh)(K(m)).
inline bool check_equivariance(int h, int k, const UEAElement& m) {
    return koszul_map(adjoint_T(h, k, m)) == rep_adjoint(h, k, koszul_map(m));
}

}  // namespace koszul
