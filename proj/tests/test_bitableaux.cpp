#include <catch2/catch_amalgamated.hpp>

#include "koszul/bitableaux.hpp"
#include "koszul/rank.hpp"

using namespace koszul;

namespace {

// Independent oracle: determinant/permanent by first-row cofactor expansion,
// a different route than the permutation sum used by the implementation.
Poly cofactor_minor(const std::vector<int>& rows, const std::vector<int>& cols, bool signed_det) {
    if (rows.empty()) return Poly::one();
    Poly out;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> sub_cols;
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != c) sub_cols.push_back(cols[k]);
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        Poly minor = cofactor_minor(sub_rows, sub_cols, signed_det);
        Poly entry = Poly::var(rows[0], cols[c]);
        int sign = (signed_det && c % 2 == 1) ? -1 : 1;
        out += Poly::scale(sign, entry * minor);
    }
    return out;
}

std::vector<Monomial> all_monomials(int n, int degree) {
    std::vector<VarIndex> vars;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back({i, j});
    std::vector<Monomial> out;
    std::vector<VarIndex> cur;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.push_back(Monomial::from_vars(cur));
            return;
        }
        for (std::size_t v = from; v < vars.size(); ++v) {
            cur.push_back(vars[v]);
            self(self, v, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, degree);
    return out;
}

}  // namespace

TEST_CASE("biproduct golden values") {
    CHECK(biproduct({1}, {2}) == Poly::var(1, 2));
    CHECK(biproduct({1, 2}, {1, 2}) ==
          Poly::var(1, 2) * Poly::var(2, 1) - Poly::var(1, 1) * Poly::var(2, 2));
    CHECK(biproduct({1, 1}, {1, 2}).is_zero());
    CHECK_THROWS_AS(biproduct({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("star biproduct golden values") {
    CHECK(star_biproduct({1}, {2}) == Poly::var(1, 2));
    CHECK(star_biproduct({1, 2}, {1, 2}) ==
          Poly::var(1, 1) * Poly::var(2, 2) + Poly::var(1, 2) * Poly::var(2, 1));
    CHECK(star_biproduct({1, 1}, {1, 1}) ==
          Poly::scale(2, Poly::var(1, 1) * Poly::var(1, 1)));
}

TEST_CASE("biproducts against cofactor expansion") {
    const std::vector<std::vector<int>> words = {
        {1}, {2}, {1, 2}, {2, 1}, {1, 3}, {3, 2}, {1, 2, 3}, {2, 1, 3}, {3, 1, 2}};
    for (const auto& w : words)
        for (const auto& u : words) {
            if (w.size() != u.size()) continue;
            CHECK(biproduct(w, u) ==
                  Poly::scale(parity_sign(choose2(static_cast<long long>(w.size()))),
                              cofactor_minor(w, u, true)));
            CHECK(star_biproduct(w, u) == cofactor_minor(w, u, false));
        }
}

TEST_CASE("crossing sign") {
    CHECK(crossing_sign(Partition{1, 1}) == -1);
    CHECK(crossing_sign(Partition{2}) == 1);
    CHECK(crossing_sign(Partition{}) == 1);
    for (int h = 1; h <= 6; ++h) {
        std::vector<int> col(static_cast<std::size_t>(h), 1);
        CHECK(crossing_sign(Partition(col)) == parity_sign(choose2(h)));
    }
}

TEST_CASE("bitableau") {
    // A column bitableau collapses to a signed monomial.
    const Tableau s{{1}, {2}, {3}};
    const Tableau t{{2}, {1}, {1}};
    CHECK(bitableau(s, t) ==
          Poly::scale(parity_sign(choose2(3)),
                      Poly::var(1, 2) * Poly::var(2, 1) * Poly::var(3, 1)));
    CHECK(bitableau(Tableau{{1, 2}}, Tableau{{1, 2}}) == biproduct({1, 2}, {1, 2}));
    CHECK(bitableau(Tableau{{1, 1}}, Tableau{{1, 2}}).is_zero());
    CHECK_THROWS_AS(bitableau(Tableau{{1, 2}}, Tableau{{1}, {2}}), std::invalid_argument);
}

TEST_CASE("star bitableau") {
    const Tableau s{{1}, {2}};
    const Tableau t{{2}, {1}};
    CHECK(star_bitableau(s, t) == Poly::var(1, 2) * Poly::var(2, 1));
    CHECK(star_bitableau(Tableau{{1, 2}}, Tableau{{1, 2}}) == star_biproduct({1, 2}, {1, 2}));
    CHECK(star_bitableau(Tableau{}, Tableau{}) == Poly::one());
}

TEST_CASE("symmetrized bitableau worked example") {
    const Tableau s{{1, 3}, {2, 4}};
    const Tableau t{{1, 2}, {1, 3}};
    const Tableau t_swapped{{1, 3}, {1, 2}};
    CHECK(symmetrized_bitableau(s, t) ==
          Poly::scale(2, bitableau(s, t)) + Poly::scale(2, bitableau(s, t_swapped)));
    CHECK(symmetrized_bitableau(Tableau{{1, 2}}, Tableau{{2, 3}}) ==
          bitableau(Tableau{{1, 2}}, Tableau{{2, 3}}));
}

TEST_CASE("standard bitableaux have full rank, n=2") {
    const int n = 2;
    for (int d = 1; d <= 4; ++d) {
        auto monos = all_monomials(n, d);
        std::map<Monomial, std::size_t> index;
        for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;

        std::vector<std::vector<Int>> rows;
        std::vector<std::vector<Int>> star_rows;
        for (const auto& lam : partitions_of(d)) {
            if (lam.part(0) > n) continue;
            const auto std_tabs = enumerate_standard(lam, n);
            for (const auto& s : std_tabs)
                for (const auto& t : std_tabs) {
                    std::vector<Int> row(monos.size(), 0);
                    const Poly b = bitableau(s, t);
                    for (const auto& [m, c] : b.terms()) row[index.at(m)] = c;
                    rows.push_back(std::move(row));
                }
        }
        for (const auto& lam : partitions_of(d)) {
            // Costandard pairs index the permanental basis; the shape bound
            // sits on the conjugate side (at most n rows).
            if (lam.conjugate().part(0) > n) continue;
            std::vector<Tableau> co;
            for (const auto& t : enumerate_standard(lam.conjugate(), n))
                co.push_back(conjugate_tableau(t));
            for (const auto& u : co)
                for (const auto& v : co) {
                    std::vector<Int> row(monos.size(), 0);
                    const Poly b = star_bitableau(u, v);
                    for (const auto& [m, c] : b.terms()) row[index.at(m)] = c;
                    star_rows.push_back(std::move(row));
                }
        }
        INFO("degree " << d);
        CHECK(rows.size() == monos.size());
        CHECK(integer_rank(rows) == static_cast<int>(monos.size()));
        CHECK(star_rows.size() == monos.size());
        CHECK(integer_rank(star_rows) == static_cast<int>(monos.size()));
    }
}
