#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "koszul/superpoly.hpp"
#include "koszul/tableaux.hpp"

namespace koszul {

/// A product of superpolarizations, stored left factor first; each pair is
/// (creator, annihilator). Acting on a polynomial applies the RIGHTMOST pair
/// first, matching how e_{S,C} e_{C,T} acts by composition.
struct OperatorWord {
    std::vector<std::pair<SuperSymbol, SuperSymbol>> pairs;
};

/// Irregularity: some right subword annihilates a virtual symbol more often
/// than that subword had already created it. Such words act as zero on
/// proper polynomials.
inline bool is_irregular(const OperatorWord& w) {
    std::map<SuperSymbol, long long> created, annihilated;
    for (auto it = w.pairs.rbegin(); it != w.pairs.rend(); ++it) {
        const auto& [creator, annihilator] = *it;
        if (annihilator.kind != SymbolKind::Proper) {
            if (annihilated[annihilator] + 1 > created[annihilator]) return true;
            ++annihilated[annihilator];
        }
        if (creator.kind != SymbolKind::Proper) ++created[creator];
    }
    return false;
}

/// Compose the superpolarizations of `w`, rightmost pair applied first.
inline SuperPoly apply_word(const OperatorWord& w, const SuperPoly& p) {
    SuperPoly cur = p;
    for (auto it = w.pairs.rbegin(); it != w.pairs.rend() && !cur.is_zero(); ++it)
        cur = superpolarize(it->first, it->second, cur);
    return cur;
}

namespace detail {

// Row-major bitableau-monomial word e_{X,Y}: the r-th factor pairs the r-th
// entry of X (creator) with the r-th entry of Y (annihilator).
inline void append_pair_block(OperatorWord& w, const std::vector<SuperSymbol>& creators,
                              const std::vector<SuperSymbol>& annihilators) {
    for (std::size_t r = 0; r < creators.size(); ++r)
        w.pairs.emplace_back(creators[r], annihilators[r]);
}

inline std::vector<SuperSymbol> proper_reading(const Tableau& t) {
    std::vector<SuperSymbol> out;
    for (int v : t.reading()) out.push_back(proper(v));
    return out;
}

// Coderuyts tableau of shape lambda read row-major: row k is alpha_k
// repeated lambda_k times.
inline std::vector<SuperSymbol> coderuyts_reading(const Partition& shape) {
    std::vector<SuperSymbol> out;
    for (int k = 0; k < shape.rows(); ++k)
        for (int c = 0; c < shape.part(k); ++c) out.push_back(alpha(k + 1));
    return out;
}

// Deruyts tableau of shape lambda read row-major: row k is beta_1..beta_{lambda_k}.
inline std::vector<SuperSymbol> deruyts_reading(const Partition& shape) {
    std::vector<SuperSymbol> out;
    for (int k = 0; k < shape.rows(); ++k)
        for (int c = 0; c < shape.part(k); ++c) out.push_back(beta(c + 1));
    return out;
}

// Conjugate of the Deruyts tableau of the conjugate shape: row k is beta_k
// repeated lambda_k times (row-constant negative symbols).
inline std::vector<SuperSymbol> deruyts_conjugate_reading(const Partition& shape) {
    std::vector<SuperSymbol> out;
    for (int k = 0; k < shape.rows(); ++k)
        for (int c = 0; c < shape.part(k); ++c) out.push_back(beta(k + 1));
    return out;
}

inline Poly run_balanced_word(const OperatorWord& w, const Poly& p) {
    return project_poly(apply_word(w, embed_poly(p)));
}

inline void check_same_shape(const Tableau& s, const Tableau& t, const char* who) {
    if (s.shape() != t.shape()) throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

}  // namespace detail

/// Word of the determinantal balanced monomial e_{S,C} e_{C,T}.
inline OperatorWord capelli_word(const Tableau& s, const Tableau& t) {
    detail::check_same_shape(s, t, "capelli_word");
    const Partition shape = s.shape();
    const auto cod = detail::coderuyts_reading(shape);
    OperatorWord w;
    detail::append_pair_block(w, detail::proper_reading(s), cod);
    detail::append_pair_block(w, cod, detail::proper_reading(t));
    return w;
}

/// Word of the permanental balanced monomial e_{S,D~} e_{D~,T}.
inline OperatorWord star_capelli_word(const Tableau& s, const Tableau& t) {
    detail::check_same_shape(s, t, "star_capelli_word");
    const Partition shape = s.shape();
    const auto der = detail::deruyts_conjugate_reading(shape);
    OperatorWord w;
    detail::append_pair_block(w, detail::proper_reading(s), der);
    detail::append_pair_block(w, der, detail::proper_reading(t));
    return w;
}

/// Word of the three-factor balanced monomial e_{S,C} e_{C,D} e_{D,T}.
inline OperatorWord young_capelli_word(const Tableau& s, const Tableau& t) {
    detail::check_same_shape(s, t, "young_capelli_word");
    const Partition shape = s.shape();
    const auto cod = detail::coderuyts_reading(shape);
    const auto der = detail::deruyts_reading(shape);
    OperatorWord w;
    detail::append_pair_block(w, detail::proper_reading(s), cod);
    detail::append_pair_block(w, cod, der);
    detail::append_pair_block(w, der, detail::proper_reading(t));
    return w;
}

/// Action of the determinantal balanced monomial defining [S|T] on a proper
/// polynomial, computed entirely inside the supersymmetric algebra.
inline Poly oracle_capelli_action(const Tableau& s, const Tableau& t, const Poly& p) {
    return detail::run_balanced_word(capelli_word(s, t), p);
}

/// Same for the permanental balanced monomial defining [S|T]*.
inline Poly oracle_star_action(const Tableau& s, const Tableau& t, const Poly& p) {
    return detail::run_balanced_word(star_capelli_word(s, t), p);
}

/// Same for the three-factor balanced monomial defining [S|box T].
inline Poly oracle_young_action(const Tableau& s, const Tableau& t, const Poly& p) {
    return detail::run_balanced_word(young_capelli_word(s, t), p);
}

}  // namespace koszul
