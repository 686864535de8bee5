#include "doctest.h"
#include "oracles.hpp"

#include "hamloc/betti_chern.hpp"
#include "hamloc/corpus.hpp"
#include "hamloc/localization.hpp"
#include "hamloc/selftest.hpp"

#include <numeric>
#include <random>

using namespace hamloc;

namespace {

// b for CP^a x CP^b: b_2k = #{(i, j) : i + j = k}.
BettiVector product_betti(int a, int b) {
    BettiVector out(static_cast<std::size_t>(a + b + 1), 0);
    for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) ++out[static_cast<std::size_t>(i + j)];
    }
    return out;
}

BigInt sum_a(const CIntegerBreakdown& c, const BettiVector& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < c.coeffs_A.size(); ++i) s += c.coeffs_A[i] * static_cast<long>(b[i]);
    return s;
}

} // namespace

TEST_CASE("chern_number_from_betti examples") {
    CHECK(chern_number_from_betti(2, {1, 1, 1}) == 9);
    CHECK(chern_number_from_betti(2, {1, 2, 1}) == 8);
    CHECK(chern_number_from_betti(3, {1, 1, 1, 1}) == 24);
    CHECK(chern_number_from_betti(1, {1, 1}) == 2);
    CHECK_THROWS_AS(chern_number_from_betti(2, {1, 1}), DomainError);
}

TEST_CASE("chern_number_from_betti agrees with product manifolds") {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 0; a + b <= 7; ++b) {
            const int n = a + b;
            const std::vector<int> idx = n == 1 ? std::vector<int>{1} : std::vector<int>{1, n - 1};
            CHECK(chern_number_from_betti(n, product_betti(a, b)) == oracle::product_chern_number(a, b, idx));
        }
    }
}

TEST_CASE("chern_number_from_betti agrees with localization on the corpus") {
    for (const auto& [name, d] : builtin_corpus(5)) {
        CAPTURE(name);
        CHECK(chern_number_from_betti(d.n, morse_profile(d).betti) == chern_number_c1cn1(d));
    }
}

TEST_CASE("c_integer examples") {
    auto c = c_integer(3, 2, {1, 1, 1});
    CHECK(c.value == 0);
    CHECK(c.m_value == 0);
    CHECK(c_integer(2, 2, {1, 2, 1}).value == 0);
    CHECK(c_integer(4, 3, {1, 1, 1, 1}).value == 0);
    // 9 - 4 * 1 * 3
    CHECK(c_integer(4, 2, {1, 1, 1}).value == -3);
    CHECK(c_integer(-2, 2, {1, 2, 1}).value == 16);

    CHECK_THROWS_AS(c_integer(3, 2, {1, 2, 0}), DomainError);
    CHECK_THROWS_AS(c_integer(3, 2, {1, 1}), DomainError);
}

TEST_CASE("c_integer coefficients") {
    // n = 2: A_0 = 12 - 2(rho + 1), A_1 = -(rho + 1).
    CHECK(c_integer_coefficients(3, 2) == std::vector<BigInt>{4, -4});
    // n = 3: A_0 = 27 - 3(rho + 1), A_1 = -(3(rho + 1) - 3).
    CHECK(c_integer_coefficients(4, 3) == std::vector<BigInt>{12, -12});
    // n = 1: A_0 = -(2 - 3).
    CHECK(c_integer_coefficients(1, 1) == std::vector<BigInt>{1});

    for (int n = 1; n <= 12; ++n) {
        for (int rho = -2 * n; rho <= 2 * n + 2; ++rho) {
            CAPTURE(n);
            CAPTURE(rho);
            const auto A = c_integer_coefficients(rho, n);
            CHECK(A.size() == static_cast<std::size_t>(n / 2 + 1));
            // Strict decrease over 0 .. floor(n/2) - 1.
            for (std::size_t i = 1; i + 1 < A.size(); ++i) CHECK(A[i] < A[i - 1]);
            const BigInt m = std::accumulate(A.begin(), A.end(), BigInt(0));
            CHECK(2 * m == BigInt(n) * (n + 1) * (n + 1 - rho));
        }
    }
}

TEST_CASE("c_integer: lambda index") {
    CHECK(c_integer(3, 2, {1, 1, 1}).lambda_index == 1);
    // A_0 = 12 - 2(-6 + 1) > 0, A_1 = 5 > 0
    CHECK_FALSE(c_integer(-6, 2, {1, 1, 1}).lambda_index.has_value());
    // A_0 = 12 - 2 * 7 < 0
    CHECK(c_integer(6, 2, {1, 1, 1}).lambda_index == 0);
}

TEST_CASE("c_integer forms agree on random symmetric Betti numbers") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> bd(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 10;
        BettiVector b(static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n / 2; ++k) {
            b[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(n - k)] = k == 0 ? 1 : bd(rng);
        }
        const BigInt rho = trial % 13 - 6;
        const auto c = c_integer(rho, n, b);
        const long chi = std::accumulate(b.begin(), b.end(), 0L);
        CHECK(2 * c.value == 2 * chern_number_from_betti(n, b) - rho * n * chi);
        CHECK(c.value == sum_a(c, b));
    }
}

TEST_CASE("check_bounds on the CP1 x CP1 candidates") {
    const auto d = gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2}));
    const auto r = enumerate_skeletons(d, 100, false);
    REQUIRE(r.skeletons.size() == 4);

    auto rep = check_bounds(d, analyze_skeleton(d, r.skeletons[0]));
    CHECK(rep.rho == 2);
    REQUIRE(rep.c);
    CHECK(rep.c->value == 0);
    CHECK(rep.all_ok());

    rep = check_bounds(d, analyze_skeleton(d, r.skeletons[2]));
    CHECK(rep.rho == -2);
    REQUIRE(rep.c);
    CHECK(rep.c->value == 16);
    CHECK(rep.c_nonneg_ok);
    CHECK(rep.c_zero_iff_all_equal_ok);
    CHECK(rep.all_ok());
}

TEST_CASE("check_bounds holds for every candidate in the corpus") {
    for (const auto& [name, d] : builtin_corpus(4)) {
        CAPTURE(name);
        const auto r = enumerate_skeletons(d, kCorpusSkeletonCap, false);
        for (const auto& s : r.skeletons) {
            const auto rep = check_bounds(d, analyze_skeleton(d, s));
            CHECK(rep.all_ok());
            CHECK(rep.unimodal_applicable);
        }
    }
}
