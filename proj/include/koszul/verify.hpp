#pragma once

// Named verification suites. Each suite replays one family of identities at
// a configurable size and reports a single pass/fail line; the CLI and the
// acceptance tests share these runners.

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/bitableaux.hpp"
#include "koszul/capelli.hpp"
#include "koszul/koszul_map.hpp"
#include "koszul/oracle.hpp"
#include "koszul/rank.hpp"
#include "koszul/sweep.hpp"

namespace koszul {

struct SuiteReport {
    std::string name;
    bool pass = true;
    std::uint64_t checks = 0;
    std::string detail;  // counterexample or summary note

    void record(bool ok, const std::function<std::string()>& describe) {
        ++checks;
        if (ok || !pass) return;
        pass = false;
        detail = describe();
    }
};

struct VerifyOptions {
    int n = 2;
    int max_degree = 3;
};

namespace verifydetail {

inline std::vector<Monomial> monomials_up_to(int n, int max_degree) {
    std::vector<VarIndex> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back({i, j});
    std::vector<Monomial> out;
    std::vector<VarIndex> cur;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        out.push_back(Monomial::from_vars(cur));
        if (left == 0) return;
        for (std::size_t v = from; v < vars.size(); ++v) {
            cur.push_back(vars[v]);
            self(self, v, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_degree);
    return out;
}

inline std::vector<PBWMonomial> pbw_up_to(int n, int max_degree) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gens.push_back({i, j});
    std::vector<PBWMonomial> out;
    std::vector<Generator> word;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        out.push_back(PBWMonomial::from_word(word));
        if (left == 0) return;
        for (std::size_t g = from; g < gens.size(); ++g) {
            word.push_back(gens[g]);
            self(self, g, left - 1);
            word.pop_back();
        }
    };
    rec(rec, 0, max_degree);
    return out;
}

inline std::vector<std::vector<int>> index_lists(int n, int h) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(h), 1);
    if (h == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        std::size_t k = 0;
        while (k < cur.size() && ++cur[k] > n) cur[k++] = 1;
        if (k == cur.size()) break;
    }
    return out;
}

}  // namespace verifydetail

/// K(B(p)) = p on monomials and B(K(u)) = u on PBW monomials.
inline SuiteReport verify_roundtrip(const VerifyOptions& opt) {
    SuiteReport rep{.name = "roundtrip"};
    for (const Monomial& m : verifydetail::monomials_up_to(opt.n, opt.max_degree)) {
        const Poly p = Poly::monomial_term(m, 1);
        rep.record(koszul_map(inverse_koszul(p)) == p,
                   [&] { return "K(B(p)) != p for p = " + to_text(p); });
        if (!rep.pass) return rep;
    }
    for (const PBWMonomial& m : verifydetail::pbw_up_to(opt.n, opt.max_degree)) {
        const UEAElement u = UEAElement::monomial_term(m, 1);
        rep.record(inverse_koszul(koszul_map(u)) == u,
                   [&] { return "B(K(u)) != u for u = " + to_text(u); });
        if (!rep.pass) return rep;
    }
    return rep;
}

/// H_k and K_lambda are killed by every adjoint operator; K(K_lambda) is the
/// signed product of minor sums.
inline SuiteReport verify_centrality(const VerifyOptions& opt) {
    SuiteReport rep{.name = "centrality"};
    const int n = opt.n;
    for (int k = 1; k <= n; ++k) {
        const UEAElement hk = capelli_H(k, n);
        rep.record(is_central(hk, n),
                   [&] { return "H_" + std::to_string(k) + " is not central"; });
        rep.record(koszul_map(hk) == poly_h(k, n),
                   [&] { return "K(H_" + std::to_string(k) + ") != h_" + std::to_string(k); });
    }
    for (int d = 1; d <= opt.max_degree && rep.pass; ++d)
        for (const Partition& lam : partitions_of(d)) {
            if (lam.part(0) > n) continue;
            const UEAElement kl = capelli_K(lam, n);
            rep.record(is_central(kl, n), [&] { return "K_lambda not central, |lambda|=" +
                                                       std::to_string(d); });
            Poly expect = Poly::one();
            for (int p : lam.parts()) expect *= poly_h(p, n);
            expect = Poly::scale(parity_sign(choose2(d)), expect);
            rep.record(koszul_map(kl) == expect,
                       [&] { return "K(K_lambda) sign/product mismatch, |lambda|=" +
                                    std::to_string(d); });
            if (!rep.pass) return rep;
        }
    rep.record(char_poly_check(n), [&] { return "characteristic polynomial mismatch"; });
    return rep;
}

/// K intertwines the two adjoint actions on all small PBW monomials.
inline SuiteReport verify_equivariance(const VerifyOptions& opt) {
    SuiteReport rep{.name = "equivariance"};
    for (const PBWMonomial& m : verifydetail::pbw_up_to(opt.n, opt.max_degree)) {
        const UEAElement u = UEAElement::monomial_term(m, 1);
        for (int h = 1; h <= opt.n; ++h)
            for (int k = 1; k <= opt.n; ++k) {
                rep.record(check_equivariance(h, k, u), [&] {
                    return "equivariance fails at T_" + std::to_string(h) + "," +
                           std::to_string(k) + " on " + to_text(u);
                });
                if (!rep.pass) return rep;
            }
    }
    return rep;
}

/// Column sign relation between the two recursions.
inline SuiteReport verify_signs(const VerifyOptions& opt) {
    SuiteReport rep{.name = "signs"};
    for (int h = 0; h <= opt.max_degree; ++h) {
        const int sign = parity_sign(choose2(h));
        for (const auto& is : verifydetail::index_lists(opt.n, h))
            for (const auto& js : verifydetail::index_lists(opt.n, h)) {
                rep.record(
                    column_capelli(is, js) ==
                        UEAElement::scale(sign, column_capelli_star(is, js)),
                    [&] {
                        std::ostringstream os;
                        os << "sign relation fails at depth " << h;
                        return os.str();
                    });
                if (!rep.pass) return rep;
            }
    }
    rep.detail = "exponent C(h,2) confirmed for depth <= " + std::to_string(opt.max_degree);
    return rep;
}

/// Standard pair counts match the monomial dimension; the bitableaux and the
/// Capelli bitableaux both have full rank over their coordinate lattices.
inline SuiteReport verify_bases(const VerifyOptions& opt) {
    SuiteReport rep{.name = "bases"};
    const int n = opt.n;
    for (int d = 1; d <= opt.max_degree; ++d) {
        const auto monos = verifydetail::monomials_up_to(n, d);
        std::map<Monomial, std::size_t> mono_index;
        std::vector<Monomial> exact;
        for (const Monomial& m : monos)
            if (m.degree() == d) {
                mono_index[m] = exact.size();
                exact.push_back(m);
            }
        const auto pbws = verifydetail::pbw_up_to(n, d);
        std::map<PBWMonomial, std::size_t> pbw_index;
        for (std::size_t k = 0; k < pbws.size(); ++k) pbw_index[pbws[k]] = k;

        std::vector<std::vector<Int>> poly_rows, cap_rows;
        for (const Partition& lam : partitions_of(d)) {
            if (lam.part(0) > n) continue;
            const auto tabs = enumerate_standard(lam, n);
            for (const auto& s : tabs)
                for (const auto& t : tabs) {
                    std::vector<Int> prow(exact.size(), 0);
                    const Poly b = bitableau(s, t);
                    for (const auto& [m, c] : b.terms()) prow[mono_index.at(m)] = c;
                    poly_rows.push_back(std::move(prow));

                    std::vector<Int> crow(pbws.size(), 0);
                    const UEAElement cap = capelli_bitableau(s, t);
                    for (const auto& [m, c] : cap.terms()) crow[pbw_index.at(m)] = c;
                    cap_rows.push_back(std::move(crow));
                }
        }
        const Int expected = binomial(static_cast<unsigned>(n * n + d - 1),
                                      static_cast<unsigned>(d));
        rep.record(Int(poly_rows.size()) == expected, [&] {
            return "standard pair count != monomial dimension at degree " + std::to_string(d);
        });
        rep.record(integer_rank(poly_rows) == static_cast<int>(poly_rows.size()), [&] {
            return "bitableau rank deficient at degree " + std::to_string(d);
        });
        rep.record(integer_rank(cap_rows) == static_cast<int>(cap_rows.size()), [&] {
            return "capelli bitableau rank deficient at degree " + std::to_string(d);
        });

        // Costandard *-side: same dimension through the conjugate shapes.
        std::vector<std::vector<Int>> star_rows, star_cap_rows;
        for (const Partition& lam : partitions_of(d)) {
            if (lam.conjugate().part(0) > n) continue;
            std::vector<Tableau> co;
            for (const auto& t : enumerate_standard(lam.conjugate(), n))
                co.push_back(conjugate_tableau(t));
            for (const auto& u : co)
                for (const auto& v : co) {
                    std::vector<Int> prow(exact.size(), 0);
                    const Poly b = star_bitableau(u, v);
                    for (const auto& [m, c] : b.terms()) prow[mono_index.at(m)] = c;
                    star_rows.push_back(std::move(prow));

                    std::vector<Int> crow(pbws.size(), 0);
                    const UEAElement cap = star_capelli_bitableau(u, v);
                    for (const auto& [m, c] : cap.terms()) crow[pbw_index.at(m)] = c;
                    star_cap_rows.push_back(std::move(crow));
                }
        }
        rep.record(Int(star_rows.size()) == expected, [&] {
            return "costandard pair count != monomial dimension at degree " +
                   std::to_string(d);
        });
        rep.record(integer_rank(star_rows) == static_cast<int>(star_rows.size()), [&] {
            return "star bitableau rank deficient at degree " + std::to_string(d);
        });
        rep.record(integer_rank(star_cap_rows) == static_cast<int>(star_cap_rows.size()),
                   [&] {
                       return "star capelli rank deficient at degree " + std::to_string(d);
                   });
        if (!rep.pass) return rep;
    }
    return rep;
}

/// Packed-sweep oracle equivalence at the requested size.
inline SuiteReport verify_oracle(const VerifyOptions& opt) {
    SuiteReport rep{.name = "oracle"};
    OracleSweepOptions sw;
    sw.n = opt.n;
    sw.max_shape_weight = opt.max_degree;
    sw.max_degree = opt.max_degree;
    const OracleSweepResult res = run_oracle_sweep(sw);
    rep.checks = res.comparisons;
    rep.pass = res.ok;
    rep.detail = res.ok ? std::to_string(res.pairs) + " pair-flavor combinations"
                        : res.failure;
    return rep;
}

/// Triangular action of standard Young-Capelli bitableaux on the
/// Gordan-Capelli basis: vanishing below the shape, vanishing across equal
/// degrees, and an invertible same-shape pairing matrix.
inline SuiteReport verify_action(const VerifyOptions& opt) {
    SuiteReport rep{.name = "action"};
    const int n = opt.n;
    // Standard symmetrized-bitableau basis per degree, as integer coordinate
    // columns over the exact monomial list.
    for (int d = 1; d <= opt.max_degree && rep.pass; ++d) {
        std::vector<Monomial> exact;
        std::map<Monomial, std::size_t> mono_index;
        for (const Monomial& m : verifydetail::monomials_up_to(n, d))
            if (m.degree() == d) {
                mono_index[m] = exact.size();
                exact.push_back(m);
            }
        struct BasisVec {
            Partition shape;
            Tableau u, v;
            Poly value;
        };
        std::vector<BasisVec> basis;
        for (const Partition& lam : partitions_of(d)) {
            if (lam.part(0) > n) continue;
            const auto tabs = enumerate_standard(lam, n);
            for (const auto& u : tabs)
                for (const auto& v : tabs)
                    basis.push_back({lam, u, v, symmetrized_bitableau(u, v)});
        }
        if (basis.size() != exact.size()) {
            rep.record(false, [&] {
                return "standard pair count != dimension at degree " + std::to_string(d);
            });
            return rep;
        }
        std::vector<std::vector<Rat>> bmat(exact.size(),
                                           std::vector<Rat>(basis.size(), 0));
        for (std::size_t col = 0; col < basis.size(); ++col)
            for (const auto& [m, c] : basis[col].value.terms())
                bmat[mono_index.at(m)][col] = Rat(c);
        const auto binv = rational_inverse(bmat);
        if (!binv) {
            rep.record(false, [&] {
                return "symmetrized basis is singular at degree " + std::to_string(d);
            });
            return rep;
        }

        for (const Partition& lam : partitions_of(d)) {
            if (lam.part(0) > n) continue;
            const auto tabs = enumerate_standard(lam, n);
            if (tabs.empty()) continue;
            // Young-Capelli elements of shape lambda.
            std::map<std::pair<int, int>, UEAElement> yc;
            for (std::size_t a = 0; a < tabs.size(); ++a)
                for (std::size_t b = 0; b < tabs.size(); ++b)
                    yc[{static_cast<int>(a), static_cast<int>(b)}] =
                        right_young_capelli(tabs[a], tabs[b]);

            // Vanishing on strictly smaller degrees.
            for (int dd = 1; dd < d && rep.pass; ++dd)
                for (const Partition& mu : partitions_of(dd)) {
                    if (mu.part(0) > n) continue;
                    const auto small_tabs = enumerate_standard(mu, n);
                    for (const auto& u : small_tabs)
                        for (const auto& v : small_tabs) {
                            const Poly target = symmetrized_bitableau(u, v);
                            for (const auto& [ab, el] : yc) {
                                rep.record(act_on_poly(el, target).is_zero(), [&] {
                                    return "nonzero action on lower degree " +
                                           std::to_string(dd);
                                });
                                if (!rep.pass) return rep;
                            }
                        }
                }
            // Vanishing on different shapes of the same degree.
            for (const auto& bv : basis) {
                if (bv.shape == lam) continue;
                for (const auto& [ab, el] : yc) {
                    rep.record(act_on_poly(el, bv.value).is_zero(), [&] {
                        return "nonzero action across shapes at degree " + std::to_string(d);
                    });
                    if (!rep.pass) return rep;
                }
            }
            // Same shape: for every standard pair (S0, V0), the pairing matrix
            // P[T,U] = coefficient of (S0|box V0) in [S0|box T]((U|box V0)) is
            // invertible.
            for (std::size_t s0 = 0; s0 < tabs.size() && rep.pass; ++s0)
                for (std::size_t v0 = 0; v0 < tabs.size() && rep.pass; ++v0) {
                    // Locate the basis column of (S0|box V0).
                    std::size_t target_col = basis.size();
                    for (std::size_t col = 0; col < basis.size(); ++col)
                        if (basis[col].shape == lam && basis[col].u == tabs[s0] &&
                            basis[col].v == tabs[v0]) {
                            target_col = col;
                            break;
                        }
                    // Only one coordinate of the expansion is needed, so a
                    // single row of the inverse does the extraction.
                    const std::vector<Rat>& extract = (*binv)[target_col];
                    std::vector<std::vector<Rat>> pairing(
                        tabs.size(), std::vector<Rat>(tabs.size(), 0));
                    for (std::size_t t = 0; t < tabs.size(); ++t)
                        for (std::size_t u = 0; u < tabs.size(); ++u) {
                            const Poly image = act_on_poly(
                                yc.at({static_cast<int>(s0), static_cast<int>(t)}),
                                symmetrized_bitableau(tabs[u], tabs[v0]));
                            Rat coord = 0;
                            for (const auto& [m, c] : image.terms())
                                coord += extract[mono_index.at(m)] * Rat(c);
                            pairing[t][u] = coord;
                        }
                    rep.record(rational_det(pairing) != 0, [&] {
                        return "singular same-shape pairing matrix at degree " +
                               std::to_string(d);
                    });
                }
        }
    }
    return rep;
}

inline std::vector<std::string> suite_names() {
    return {"roundtrip", "centrality", "equivariance", "signs",
            "bases",     "oracle",     "action"};
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "roundtrip") return verify_roundtrip(opt);
    if (name == "centrality") return verify_centrality(opt);
    if (name == "equivariance") return verify_equivariance(opt);
    if (name == "signs") return verify_signs(opt);
    if (name == "bases") return verify_bases(opt);
    if (name == "oracle") return verify_oracle(opt);
    if (name == "action") return verify_action(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace koszul
