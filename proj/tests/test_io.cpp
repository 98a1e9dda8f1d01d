#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "koszul/capelli.hpp"
#include "koszul/io.hpp"
#include "koszul/koszul_map.hpp"

using namespace koszul;

namespace {

Poly random_poly(std::mt19937& rng, int n, int max_degree, int terms) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
        const int d = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
        std::vector<VarIndex> vars;
        for (int k = 0; k < d; ++k)
            vars.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(n)),
                            1 + static_cast<int>(rng() % static_cast<unsigned>(n))});
        p.add_term(Monomial::from_vars(vars), static_cast<int>(rng() % 9) - 4);
    }
    return p;
}

}  // namespace

TEST_CASE("poly json round trip") {
    std::mt19937 rng(401);
    for (int t = 0; t < 30; ++t) {
        const Poly p = random_poly(rng, 3, 4, 5);
        CHECK(poly_from_json(to_json(p)) == p);
        // Byte-identical serialization for identical values.
        CHECK(to_json(p).dump() == to_json(poly_from_json(to_json(p))).dump());
    }
    CHECK(poly_from_json(to_json(Poly::zero())) == Poly::zero());
}

TEST_CASE("uea json round trip") {
    std::mt19937 rng(403);
    for (int t = 0; t < 20; ++t) {
        UEAElement u;
        for (int k = 0; k < 4; ++k) {
            std::vector<Generator> word;
            const int d = static_cast<int>(rng() % 4);
            for (int x = 0; x < d; ++x)
                word.push_back({1 + static_cast<int>(rng() % 3),
                                1 + static_cast<int>(rng() % 3)});
            std::sort(word.begin(), word.end());
            u.add_term(PBWMonomial::from_word(word), static_cast<int>(rng() % 9) - 4);
        }
        CHECK(uea_from_json(to_json(u)) == u);
        CHECK(to_json(u).dump() == to_json(uea_from_json(to_json(u))).dump());
    }
}

TEST_CASE("big coefficients survive the decimal string form") {
    Poly p = Poly::one();
    Int big("123456789012345678901234567890");
    p.add_term(Monomial::var(1, 2), big);
    p.add_term(Monomial::var(2, 1), -big * big);
    CHECK(poly_from_json(to_json(p)) == p);
}

TEST_CASE("json forms feed the maps") {
    const UEAElement el = column_capelli({1, 2, 3}, {2, 1, 1});
    const nlohmann::json j = to_json(el);
    CHECK(koszul_map(uea_from_json(j)) ==
          Poly::scale(-1, Poly::var(1, 2) * Poly::var(2, 1) * Poly::var(3, 1)));
    const nlohmann::json pj = to_json(koszul_map(el));
    CHECK(inverse_koszul(poly_from_json(pj)) == el);
}
