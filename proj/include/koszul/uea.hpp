#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koszul/int.hpp"
#include "koszul/poly.hpp"

namespace koszul {

/// Basis element e_ij of gl(n). Generator order is row-major lexicographic:
/// e_11 < e_12 < ... < e_1n < e_21 < ... < e_nn. The order is fixed globally
/// because canonical forms are compared literally.
struct Generator {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// PBW monomial: strictly increasing generators with positive exponents.
class PBWMonomial {
public:
    PBWMonomial() = default;
    explicit PBWMonomial(std::vector<std::pair<Generator, int>> factors)
        : factors_(std::move(factors)) {
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (factors_[k].second < 1) throw std::invalid_argument("PBW: zero exponent");
            if (k > 0 && !(factors_[k - 1].first < factors_[k].first))
                throw std::invalid_argument("PBW: factors not strictly increasing");
        }
    }

    static PBWMonomial one() { return PBWMonomial{}; }

    /// Build from a non-decreasing generator word.
    static PBWMonomial from_word(const std::vector<Generator>& word) {
        std::vector<std::pair<Generator, int>> f;
        for (const auto& g : word) {
            if (!f.empty() && f.back().first == g)
                ++f.back().second;
            else {
                if (!f.empty() && g < f.back().first)
                    throw std::logic_error("PBW: word not sorted");
                f.emplace_back(g, 1);
            }
        }
        PBWMonomial m;
        m.factors_ = std::move(f);
        return m;
    }

    const std::vector<std::pair<Generator, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [g, e] : factors_) d += e;
        return d;
    }

    /// Left-to-right generator word with exponents expanded.
    std::vector<Generator> word() const {
        std::vector<Generator> w;
        for (const auto& [g, e] : factors_)
            for (int t = 0; t < e; ++t) w.push_back(g);
        return w;
    }

    // Filtration degree first, then lexicographic on the factor list.
    friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.factors_ < b.factors_;
    }
    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;

private:
    std::vector<std::pair<Generator, int>> factors_;
};

/// Element of U(gl(n)): integer combination of PBW monomials, canonical.
class UEAElement {
public:
    UEAElement() = default;
    static UEAElement zero() { return UEAElement{}; }
    static UEAElement unit() { return constant(1); }
    static UEAElement constant(Int c) {
        UEAElement u;
        if (c != 0) u.terms_[PBWMonomial::one()] = std::move(c);
        return u;
    }
    static UEAElement monomial_term(PBWMonomial m, Int c) {
        UEAElement u;
        if (c != 0) u.terms_[std::move(m)] = std::move(c);
        return u;
    }

    const std::map<PBWMonomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWMonomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    UEAElement& operator+=(const UEAElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    UEAElement& operator-=(const UEAElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator-(const UEAElement& a) { return scale(-1, a); }

    static UEAElement scale(const Int& c, const UEAElement& u) {
        UEAElement out;
        if (c == 0) return out;
        for (const auto& [m, k] : u.terms_) out.terms_[m] = c * k;
        return out;
    }

    friend bool operator==(const UEAElement&, const UEAElement&) = default;

private:
    std::map<PBWMonomial, Int> terms_;
};

/// The generator e_ij as a degree-1 element.
inline UEAElement gen(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("gen: index out of range");
    return UEAElement::monomial_term(PBWMonomial::from_word({Generator{i, j}}), 1);
}

/// Filtration degree of a nonzero element.
inline int degree(const UEAElement& u) {
    if (u.is_zero()) throw std::invalid_argument("degree of zero element");
    int d = 0;
    for (const auto& [m, c] : u.terms()) d = std::max(d, m.degree());
    return d;
}

namespace detail {

// Normal-ordering of a free generator word by adjacent transposition:
// e_a e_b (out of order) -> e_b e_a + [e_a, e_b], where the commutator term
// is strictly shorter, so the rewriting terminates.
inline UEAElement normalize_word(const std::vector<Generator>& word) {
    UEAElement out;
    std::vector<std::pair<std::vector<Generator>, Int>> work;
    work.emplace_back(word, 1);
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::size_t bad = w.size();
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k + 1] < w[k]) {
                bad = k;
                break;
            }
        if (bad == w.size()) {
            out.add_term(PBWMonomial::from_word(w), c);
            continue;
        }
        const Generator a = w[bad], b = w[bad + 1];
        auto swapped = w;
        std::swap(swapped[bad], swapped[bad + 1]);
        work.emplace_back(std::move(swapped), c);
        // [e_ij, e_st] = [j==s] e_it - [i==t] e_sj
        if (a.col == b.row) {
            std::vector<Generator> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(bad));
            shorter.push_back(Generator{a.row, b.col});
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(bad) + 2, w.end());
            work.emplace_back(std::move(shorter), c);
        }
        if (a.row == b.col) {
            std::vector<Generator> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(bad));
            shorter.push_back(Generator{b.row, a.col});
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(bad) + 2, w.end());
            work.emplace_back(std::move(shorter), -c);
        }
    }
    return out;
}

// Product of two PBW monomials, memoized per thread. Laplace expansions
// revisit the same subproducts thousands of times.
inline const UEAElement& monomial_product(const PBWMonomial& a, const PBWMonomial& b) {
    thread_local std::map<std::pair<PBWMonomial, PBWMonomial>, UEAElement> memo;
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto word = a.word();
    auto wb = b.word();
    word.insert(word.end(), wb.begin(), wb.end());
    return memo.emplace(std::move(key), normalize_word(word)).first->second;
}

}  // namespace detail

/// Associative product in PBW normal form.
inline UEAElement multiply(const UEAElement& a, const UEAElement& b) {
    UEAElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const UEAElement& prod = detail::monomial_product(ma, mb);
            Int c = ca * cb;
            for (const auto& [m, k] : prod.terms()) out.add_term(m, c * k);
        }
    return out;
}

inline UEAElement commutator(const UEAElement& a, const UEAElement& b) {
    return multiply(a, b) - multiply(b, a);
}

/// Adjoint operator T_hk(m) = e_hk m - m e_hk.
inline UEAElement adjoint_T(int h, int k, const UEAElement& m) {
    const UEAElement e = gen(h, k);
    return multiply(e, m) - multiply(m, e);
}

/// Left polarization representation: a PBW monomial acts by composing
/// Dl operators with the left factor outermost; extended linearly.
inline Poly act_on_poly(const UEAElement& m, const Poly& p) {
    Poly out;
    for (const auto& [mono, c] : m.terms()) {
        Poly cur = p;
        const auto word = mono.word();
        for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it)
            cur = polarize_left(it->row, it->col, cur);
        out += Poly::scale(c, cur);
    }
    return out;
}

/// Canonical text: terms by (degree, lex), factors printed "e[i,j]^k".
inline std::string to_text(const UEAElement& u) {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "- ";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (a != 1 || m.is_one()) {
            os << a.str();
            printed = true;
        }
        for (const auto& [g, e] : m.factors()) {
            if (printed) os << ' ';
            printed = true;
            os << "e[" << g.row << "," << g.col << "]";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace koszul
