#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "koszul/int.hpp"
#include "koszul/poly.hpp"

namespace koszul {

/// Alphabet of the auxiliary supersymmetric algebra: positive virtual
/// symbols alpha_s (parity 0), negative virtual symbols beta_t (parity 1),
/// and the proper letters 1..n (parity 1).
enum class SymbolKind { Alpha, Beta, Proper };

struct SuperSymbol {
    SymbolKind kind = SymbolKind::Proper;
    int index = 0;
    friend auto operator<=>(const SuperSymbol&, const SuperSymbol&) = default;
};

inline SuperSymbol alpha(int s) { return {SymbolKind::Alpha, s}; }
inline SuperSymbol beta(int t) { return {SymbolKind::Beta, t}; }
inline SuperSymbol proper(int i) { return {SymbolKind::Proper, i}; }

/// Z2-degree of a symbol.
inline int symbol_parity(const SuperSymbol& s) { return s.kind == SymbolKind::Alpha ? 0 : 1; }

/// Variable (a|j). Its parity is |a|+1: (alpha|j) is odd, the rest are even.
struct SuperVariable {
    SuperSymbol symbol;
    int col = 0;
    friend auto operator<=>(const SuperVariable&, const SuperVariable&) = default;
};

inline bool is_odd(const SuperVariable& v) { return symbol_parity(v.symbol) == 0; }

/// Canonical supermonomial: odd variables as a strictly increasing list
/// (fixed global order: symbol index, then column), even variables as a
/// sorted exponent list. Reordering signs are tracked at construction.
struct SuperMonomial {
    std::vector<SuperVariable> odd;
    std::vector<std::pair<SuperVariable, int>> even;
    friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
};

class SuperPoly {
public:
    SuperPoly() = default;
    static SuperPoly zero() { return SuperPoly{}; }
    static SuperPoly one() { return constant(1); }
    static SuperPoly constant(Int c) {
        SuperPoly p;
        if (c != 0) p.terms_[SuperMonomial{}] = std::move(c);
        return p;
    }
    static SuperPoly variable(const SuperVariable& v) {
        SuperMonomial m;
        if (is_odd(v))
            m.odd.push_back(v);
        else
            m.even.emplace_back(v, 1);
        SuperPoly p;
        p.terms_[std::move(m)] = 1;
        return p;
    }

    const std::map<SuperMonomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SuperMonomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SuperPoly& operator+=(const SuperPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }
    static SuperPoly scale(const Int& c, const SuperPoly& p) {
        SuperPoly out;
        if (c == 0) return out;
        for (const auto& [m, k] : p.terms_) out.terms_[m] = c * k;
        return out;
    }

    friend bool operator==(const SuperPoly&, const SuperPoly&) = default;

private:
    std::map<SuperMonomial, Int> terms_;
};

namespace detail {

// Merge two odd lists, counting transpositions; returns false on a repeated
// odd variable (squares of odd variables vanish).
inline bool merge_odd(const std::vector<SuperVariable>& a, const std::vector<SuperVariable>& b,
                      std::vector<SuperVariable>& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long long crossings = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining a-suffix.
            crossings += static_cast<long long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    sign = parity_sign(crossings);
    return true;
}

inline void merge_even(const std::vector<std::pair<SuperVariable, int>>& a,
                       const std::vector<std::pair<SuperVariable, int>>& b,
                       std::vector<std::pair<SuperVariable, int>>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            out.push_back(a[i++]);
        else if (b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
}

}  // namespace detail

/// Supercommutative product.
inline SuperPoly mul(const SuperPoly& p, const SuperPoly& q) {
    SuperPoly out;
    for (const auto& [ma, ca] : p.terms())
        for (const auto& [mb, cb] : q.terms()) {
            SuperMonomial m;
            int sign = 1;
            if (!detail::merge_odd(ma.odd, mb.odd, m.odd, sign)) continue;
            detail::merge_even(ma.even, mb.even, m.even);
            out.add_term(m, ca * cb * sign);
        }
    return out;
}

/// Left superpolarization D_{a,b}: the unique left superderivation of
/// Z2-degree |a|+|b| with D((c|j)) = [b==c] (a|j). The Leibniz sign is
/// (-1)^{|D| * parity of the skipped prefix} in the monomial's canonical
/// order (odd block first, then the even block).
inline SuperPoly superpolarize(const SuperSymbol& a, const SuperSymbol& b, const SuperPoly& p) {
    const int dpar = (symbol_parity(a) + symbol_parity(b)) % 2;
    SuperPoly out;
    for (const auto& [m, c] : p.terms()) {
        const std::size_t k = m.odd.size();
        // Hits inside the odd block.
        for (std::size_t idx = 0; idx < k; ++idx) {
            if (m.odd[idx].symbol != b) continue;
            int sign = (dpar != 0 && (idx % 2) != 0) ? -1 : 1;
            const SuperVariable w{a, m.odd[idx].col};
            SuperMonomial r;
            r.even = m.even;
            r.odd.reserve(k);
            for (std::size_t t = 0; t < k; ++t)
                if (t != idx) r.odd.push_back(m.odd[t]);
            if (is_odd(w)) {
                auto pos = std::lower_bound(r.odd.begin(), r.odd.end(), w);
                if (pos != r.odd.end() && *pos == w) continue;  // odd square
                const auto pidx = static_cast<std::size_t>(pos - r.odd.begin());
                const long long crossings =
                    pidx > idx ? static_cast<long long>(pidx - idx)
                               : static_cast<long long>(idx - pidx);
                sign *= parity_sign(crossings);
                r.odd.insert(pos, w);
            } else {
                std::vector<std::pair<SuperVariable, int>> extra{{w, 1}};
                std::vector<std::pair<SuperVariable, int>> merged;
                detail::merge_even(r.even, extra, merged);
                r.even = std::move(merged);
            }
            out.add_term(r, c * sign);
        }
        // Hits inside the even block; the whole odd block is the prefix.
        for (std::size_t fi = 0; fi < m.even.size(); ++fi) {
            const auto& [v, e] = m.even[fi];
            if (v.symbol != b) continue;
            int sign = (dpar != 0 && (k % 2) != 0) ? -1 : 1;
            const SuperVariable w{a, v.col};
            SuperMonomial r;
            r.odd = m.odd;
            r.even = m.even;
            if (e == 1)
                r.even.erase(r.even.begin() + static_cast<long>(fi));
            else
                r.even[fi].second = e - 1;
            if (is_odd(w)) {
                auto pos = std::lower_bound(r.odd.begin(), r.odd.end(), w);
                if (pos != r.odd.end() && *pos == w) continue;
                // The new odd variable crosses every larger odd variable.
                sign *= parity_sign(static_cast<long long>(r.odd.end() - pos));
                r.odd.insert(pos, w);
            } else {
                std::vector<std::pair<SuperVariable, int>> extra{{w, 1}};
                std::vector<std::pair<SuperVariable, int>> merged;
                detail::merge_even(r.even, extra, merged);
                r.even = std::move(merged);
            }
            out.add_term(r, c * e * sign);
        }
    }
    return out;
}

/// Embed a proper polynomial into the supersymmetric algebra.
inline SuperPoly embed_poly(const Poly& p) {
    SuperPoly out;
    for (const auto& [m, c] : p.terms()) {
        SuperMonomial sm;
        for (const auto& [v, e] : m.factors())
            sm.even.emplace_back(SuperVariable{proper(v.row), v.col}, e);
        out.add_term(sm, c);
    }
    return out;
}

/// Project back; throws if any virtual symbol survives.
inline Poly project_poly(const SuperPoly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        if (!m.odd.empty()) throw std::logic_error("project_poly: odd virtual residue");
        std::vector<std::pair<VarIndex, int>> factors;
        for (const auto& [v, e] : m.even) {
            if (v.symbol.kind != SymbolKind::Proper)
                throw std::logic_error("project_poly: virtual residue");
            factors.emplace_back(VarIndex{v.symbol.index, v.col}, e);
        }
        std::sort(factors.begin(), factors.end());
        out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

}  // namespace koszul
