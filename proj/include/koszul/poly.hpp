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

namespace koszul {

/// A generic-matrix entry position (i|j), 1-based.
struct VarIndex {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

/// Product of variables with positive exponents, sorted by (row, col).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarIndex, int>> factors)
        : factors_(std::move(factors)) {
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (factors_[k].second < 1) throw std::invalid_argument("monomial: zero exponent");
            if (k > 0 && !(factors_[k - 1].first < factors_[k].first))
                throw std::invalid_argument("monomial: factors not strictly sorted");
        }
    }

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, int j) { return Monomial({{VarIndex{i, j}, 1}}); }

    const std::vector<std::pair<VarIndex, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    Monomial times(const Monomial& o) const {
        std::vector<std::pair<VarIndex, int>> out;
        out.reserve(factors_.size() + o.factors_.size());
        std::size_t a = 0, b = 0;
        while (a < factors_.size() && b < o.factors_.size()) {
            if (factors_[a].first < o.factors_[b].first)
                out.push_back(factors_[a++]);
            else if (o.factors_[b].first < factors_[a].first)
                out.push_back(o.factors_[b++]);
            else {
                out.emplace_back(factors_[a].first, factors_[a].second + o.factors_[b].second);
                ++a, ++b;
            }
        }
        while (a < factors_.size()) out.push_back(factors_[a++]);
        while (b < o.factors_.size()) out.push_back(o.factors_[b++]);
        Monomial m;
        m.factors_ = std::move(out);
        return m;
    }

    /// Variable list with multiplicities expanded, in canonical order.
    std::vector<VarIndex> expanded() const {
        std::vector<VarIndex> vars;
        for (const auto& [v, e] : factors_)
            for (int t = 0; t < e; ++t) vars.push_back(v);
        return vars;
    }

    /// The monomial with one occurrence of `v` replaced by `w` (v must occur).
    Monomial replace_one(VarIndex v, VarIndex w) const {
        auto vars = expanded();
        for (auto& x : vars)
            if (x == v) {
                x = w;
                return from_vars(vars);
            }
        throw std::logic_error("replace_one: variable not present");
    }

    static Monomial from_vars(std::vector<VarIndex> vars) {
        std::sort(vars.begin(), vars.end());
        std::vector<std::pair<VarIndex, int>> f;
        for (const auto& v : vars) {
            if (!f.empty() && f.back().first == v)
                ++f.back().second;
            else
                f.emplace_back(v, 1);
        }
        Monomial m;
        m.factors_ = std::move(f);
        return m;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<VarIndex, int>> factors_;
};

/// Sparse integer-coefficient polynomial in the variables (i|j),
/// canonical by construction: no zero coefficients are stored.
class Poly {
public:
    Poly() = default;
    static Poly zero() { return Poly{}; }
    static Poly one() { return constant(1); }
    static Poly constant(Int c) {
        Poly p;
        if (c != 0) p.terms_[Monomial::one()] = std::move(c);
        return p;
    }
    static Poly var(int i, int j) { return monomial_term(Monomial::var(i, j), 1); }
    static Poly monomial_term(Monomial m, Int c) {
        Poly p;
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Max total degree; -1 stands in for the degree of the zero polynomial
    /// (a sentinel below every true degree).
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return scale(-1, a); }

    static Poly scale(const Int& c, const Poly& p) {
        Poly out;
        if (c == 0) return out;
        for (const auto& [m, k] : p.terms_) out.terms_[m] = c * k;
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
        return out;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::map<Monomial, Int> terms_;
};

namespace detail {

// Shared derivation body: maps one variable occurrence (h|k) to `image(h,k)`
// (which may be empty), extended by Leibniz to the whole polynomial.
template <class Image>
Poly apply_derivation(const Poly& p, Image image) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.factors()) {
            for (const auto& [w, coeff] : image(v)) {
                out.add_term(m.replace_one(v, w), c * e * coeff);
            }
        }
    }
    return out;
}

}  // namespace detail

/// Left polarization: the derivation with Dl_ij((h|k)) = [h==j] (i|k).
inline Poly polarize_left(int i, int j, const Poly& p) {
    return detail::apply_derivation(p, [&](VarIndex v) {
        std::vector<std::pair<VarIndex, int>> img;
        if (v.row == j) img.push_back({VarIndex{i, v.col}, 1});
        return img;
    });
}

/// Right polarization: the derivation with Dr_ji((h|k)) = [k==i] (h|j).
inline Poly polarize_right(int j, int i, const Poly& p) {
    return detail::apply_derivation(p, [&](VarIndex v) {
        std::vector<std::pair<VarIndex, int>> img;
        if (v.col == i) img.push_back({VarIndex{v.row, j}, 1});
        return img;
    });
}

/// Adjoint action of e_ij on polynomials: Dl_ij - Dr_ji.
inline Poly rep_adjoint(int i, int j, const Poly& p) {
    return polarize_left(i, j, p) - polarize_right(j, i, p);
}

/// rho_ij(p) = Dl_ij(p) + (i|j) p, the building block of the Koszul map.
inline Poly rho(int i, int j, const Poly& p) {
    return polarize_left(i, j, p) + Poly::var(i, j) * p;
}

/// Canonical text: terms in monomial order, coefficient with explicit sign,
/// variables printed "(i|j)^e".
inline std::string to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "- ";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || m.is_one()) os << a.str();
        for (const auto& [v, e] : m.factors()) {
            os << "(" << v.row << "|" << v.col << ")";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace koszul
