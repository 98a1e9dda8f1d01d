#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "koszul/rank.hpp"

using namespace koszul;

namespace {

// Permutation-expansion determinant as an independent oracle (n <= 4).
Int perm_det(const std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int det = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Int prod = sign;
        for (std::size_t i = 0; i < n; ++i) prod *= a[i][perm[i]];
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

TEST_CASE("integer determinant matches permutation expansion") {
    std::mt19937 rng(301);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<int>(rng() % 11) - 5;
        REQUIRE(integer_det(a) == perm_det(a));
    }
}

TEST_CASE("rank of structured matrices") {
    CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(integer_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(integer_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(integer_rank({}) == 0);
    // Rank r by construction: r independent rows plus random combinations.
    std::mt19937 rng(307);
    for (int trial = 0; trial < 20; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 3);
        const int cols = r + 2, rows = r + 3;
        std::vector<std::vector<Int>> base(static_cast<std::size_t>(r),
                                           std::vector<Int>(static_cast<std::size_t>(cols)));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < cols; ++j)
                base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<int>(rng() % 9) - 4;
            base[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 7;  // dominance
        }
        std::vector<std::vector<Int>> m;
        for (int i = 0; i < rows; ++i) {
            std::vector<Int> row(static_cast<std::size_t>(cols), 0);
            for (int k = 0; k < r; ++k) {
                Int c = (i < r) ? Int(k == i ? 1 : 0) : Int(static_cast<int>(rng() % 5) - 2);
                for (int j = 0; j < cols; ++j)
                    row[static_cast<std::size_t>(j)] +=
                        c * base[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
            m.push_back(std::move(row));
        }
        REQUIRE(integer_rank(m) == r);
    }
}

TEST_CASE("rational solve") {
    auto x = solve_rational({{2, 1}, {1, 3}}, {5, 10});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);
    CHECK_FALSE(solve_rational({{1, 2}, {2, 4}}, {1, 1}).has_value());
    // Residual check on random invertible systems.
    std::mt19937 rng(311);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        std::vector<std::vector<Int>> ai(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int v = static_cast<int>(rng() % 9) - 4;
                if (i == j) v += 8;
                a[i][j] = v;
                ai[i][j] = v;
            }
        std::vector<Rat> b(n);
        for (auto& v : b) v = static_cast<int>(rng() % 7) - 3;
        auto sol = solve_rational(a, b);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += a[i][j] * (*sol)[j];
            REQUIRE(acc == b[i]);
        }
        REQUIRE(rational_det(a) != 0);
        // Bareiss and fraction elimination agree on the determinant.
        Rat rd = rational_det(a);
        REQUIRE(rd == Rat(integer_det(ai)));
    }
}
