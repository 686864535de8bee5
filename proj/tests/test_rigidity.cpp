#include "doctest.h"

#include "hamloc/corpus.hpp"
#include "hamloc/localization.hpp"
#include "hamloc/rigidity.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace hamloc;

namespace {

FixedPointData raw(int n, std::vector<std::vector<Weight>> weights) {
    FixedPointData d;
    d.n = n;
    for (std::size_t i = 0; i < weights.size(); ++i) d.points.push_back({"Q" + std::to_string(i), weights[i], {}});
    return d;
}

ExtractionError::Kind extraction_kind(const FixedPointData& d) {
    try {
        extract_ad(d);
    } catch (const ExtractionError& e) {
        return e.kind();
    }
    FAIL("extract_ad did not throw");
    return ExtractionError::Kind::WrongFixedPointCount;
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<std::int64_t> random_m(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<std::int64_t> val(-30, 30);
    std::set<std::int64_t> seen;
    while (seen.size() < static_cast<std::size_t>(n + 1)) seen.insert(val(rng));
    std::vector<std::int64_t> m(seen.begin(), seen.end());
    std::shuffle(m.begin(), m.end(), rng);
    return m;
}

} // namespace

TEST_CASE("extract_ad on CP2") {
    const auto cp2 = gen_standard_cpn({0, 1, 3});
    const auto ad = extract_ad(cp2);
    CHECK(ad.a == big({0, -1, -3}));
    CHECK(ad.d == 4);
    CHECK(morse_order(cp2) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("extract_ad failures") {
    SUBCASE("too many fixed points") {
        const auto d = gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2}));
        CHECK(extraction_kind(d) == ExtractionError::Kind::WrongFixedPointCount);
    }
    SUBCASE("gamma = (4, 2, -6) is not divisible") {
        CHECK(extraction_kind(raw(2, {{1, 3}, {-1, 3}, {-3, -3}})) == ExtractionError::Kind::DivisibilityFailure);
    }
    SUBCASE("sum of gamma nonzero") {
        CHECK(extraction_kind(raw(1, {{1}, {-2}})) == ExtractionError::Kind::SumGammaNonzero);
    }
    SUBCASE("gamma not decreasing") {
        const auto d = raw(2, {{2, 1}, {-2, 2}, {-1, -2}});
        // Morse order (Q0, Q1, Q2), gamma = (3, 0, -3): passes.
        CHECK_NOTHROW(extract_ad(d));
        const auto bad = raw(2, {{1, 2}, {5, -2}, {-1, -5}});
        // gamma = (3, 3, -6)
        CHECK(extraction_kind(bad) == ExtractionError::Kind::GammaOrderFailure);
    }
}

TEST_CASE("weight match and Laurent certificates") {
    const auto cp2 = gen_standard_cpn({0, 2, 3});
    const auto a = extract_ad(cp2).a;
    CHECK(a == big({0, -2, -3}));
    CHECK(verify_cpn_weights(cp2, a) == std::vector<bool>{true, true, true});
    for (const auto& l : laurent_certificates(cp2, a)) {
        REQUIRE(l);
        CHECK(l->is_constant(1));
    }

    auto mutated = cp2;
    mutated.points[0].weights = {1, 4};
    CHECK(verify_cpn_weights(mutated, a) == std::vector<bool>{false, true, true});
    const auto cert = laurent_certificates(mutated, a);
    // (1 - t^2)(1 - t^3) / ((1 - t)(1 - t^4)) leaves 1 + t^2 in the denominator.
    CHECK_FALSE(cert[0]);
    CHECK(cert[1]);
    CHECK_THROWS_AS(verify_cpn_weights(cp2, big({0, 1})), std::invalid_argument);
}

TEST_CASE("Laurent quotient with matching degree but wrong factors") {
    // Weights {2, 2} against the expected {1, 4}: (1 - t)(1 - t^4)/(1 - t^2)^2
    // = (1 + t^2)/(1 + t), not a polynomial.
    FixedPointData d = raw(2, {{2, 2}, {-1, 3}, {-4, -3}});
    const auto cert = laurent_certificates(d, big({0, -1, -4}));
    CHECK_FALSE(cert[0]);
}

TEST_CASE("Tolman generators of CP2") {
    const auto t = tolman_generators(gen_standard_cpn({0, 1, 3}));
    REQUIRE(t.coeffs.size() == 3);
    CHECK(t.coeffs[0] == 1);
    CHECK(t.coeffs[1] == BigRational(1, 3));
    CHECK(t.coeffs[2] == BigRational(1, 9));
    CHECK(t.c1_top == 9);
    CHECK(t.generator_check_ok);

    // Both coefficients and c1^n have degree 0 in the weights.
    auto scaled = gen_standard_cpn({0, 2, 6});
    const auto s = tolman_generators(scaled);
    CHECK(s.coeffs == t.coeffs);
    CHECK(s.c1_top == 9);
}

TEST_CASE("Tolman generators on random CP^n") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 6;
        const auto d = gen_standard_cpn(random_m(rng, n));
        const auto t = tolman_generators(d);
        CHECK(t.generator_check_ok);
        BigRational top = 1;
        for (int k = 0; k < n; ++k) top *= t.coeffs[1];
        CHECK(top * t.c1_top == 1);
        // \int c1^n = (n+1)^n
        BigInt expected = 1;
        for (int k = 0; k < n; ++k) expected *= n + 1;
        CHECK(t.c1_top == BigRational(expected));
    }
}

TEST_CASE("rigidity verdicts") {
    SUBCASE("CP2 passes") {
        const auto c = rigidity_verdict(gen_standard_cpn({0, 1, 3}, true));
        CHECK(c.passed);
        CHECK(c.failed_stage == RigidityStage::None);
        CHECK(c.reason.empty());
        CHECK(c.hypotheses_in_scope);
        CHECK(c.candidate_found);
        CHECK(c.skeleton_index == std::size_t{0});
        REQUIRE(c.analysis);
        CHECK(c.analysis->rho == 3);
        REQUIRE(c.c);
        CHECK(c.c->value == 0);
        CHECK(c.all_c1_equal_ok);
        CHECK(c.a == big({0, -1, -3}));
        CHECK(c.d == 4);
        CHECK(c.divisibility_ok);
        CHECK(c.gamma_order_ok);
        CHECK(c.laurent_ok == std::vector<bool>{true, true, true});
        CHECK(c.generator_check_ok);
    }
    SUBCASE("CP1 x CP1 has no candidate with pseudo-index n+1") {
        const auto c = rigidity_verdict(gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2})));
        CHECK_FALSE(c.passed);
        CHECK(c.failed_stage == RigidityStage::Skeleton);
        CHECK_FALSE(c.reason.empty());
    }
    SUBCASE("invalid data stops at validation") {
        const auto c = rigidity_verdict(raw(2, {{1, 2}, {-1, -3}}));
        CHECK_FALSE(c.passed);
        CHECK(c.failed_stage == RigidityStage::Validation);
    }
}

TEST_CASE("rigidity is invariant under relabelling") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 5;
        const auto m = random_m(rng, n);
        const auto d = gen_standard_cpn(m);
        const auto base = rigidity_verdict(d);
        REQUIRE(base.passed);
        std::vector<BigInt> expected;
        const auto m0 = *std::min_element(m.begin(), m.end());
        auto sorted = m;
        std::sort(sorted.begin(), sorted.end());
        for (auto x : sorted) expected.emplace_back(static_cast<long>(m0 - x));
        CHECK(base.a == expected);

        auto shuffled = d;
        std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
        for (auto& p : shuffled.points) std::shuffle(p.weights.begin(), p.weights.end(), rng);
        const auto c = rigidity_verdict(shuffled);
        CHECK(c.passed);
        CHECK(c.a == base.a);
        CHECK(c.d == base.d);
        CHECK(c.tolman_coeffs == base.tolman_coeffs);
    }
}

TEST_CASE("first_detecting_stage") {
    CHECK(first_detecting_stage(gen_standard_cpn({0, 1, 3})) == DetectionStage::None);
    CHECK(first_detecting_stage(raw(1, {{0}, {-1}})) == DetectionStage::NonzeroWeight);
    CHECK(first_detecting_stage(raw(2, {{1, 2}, {-1, -3}})) == DetectionStage::Hattori);
    CHECK(first_detecting_stage(gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2}))) ==
          DetectionStage::FixedPointCount);
    CHECK(first_detecting_stage(raw(2, {{1, 3}, {-1, 3}, {-3, -3}})) == DetectionStage::Divisibility);
    CHECK(to_string(DetectionStage::GammaOrder) == "gamma-order");
    CHECK(to_string(RigidityStage::CInteger) == "c-integer");
}
