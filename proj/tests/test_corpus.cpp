#include "doctest.h"

#include "hamloc/corpus.hpp"
#include "hamloc/rigidity.hpp"

#include <algorithm>

using namespace hamloc;

TEST_CASE("gen_standard_cpn examples") {
    const auto cp2 = gen_standard_cpn({0, 1, 3}, true);
    CHECK(cp2.n == 2);
    REQUIRE(cp2.size() == 3);
    CHECK(cp2.points[0].id == "P0");
    CHECK(cp2.points[0].weights == std::vector<Weight>{1, 3});
    CHECK(cp2.points[1].weights == std::vector<Weight>{-1, 2});
    CHECK(cp2.points[2].weights == std::vector<Weight>{-3, -2});
    CHECK(cp2.points[2].moment == BigRational(3));
    CHECK(cp2.synthetic_moments);
    CHECK(validate(cp2).all_ok());

    const auto plain = gen_standard_cpn({5, -1});
    CHECK(plain.points[0].weights == std::vector<Weight>{-6});
    CHECK_FALSE(plain.points[0].moment);
    CHECK_FALSE(plain.synthetic_moments);
}

TEST_CASE("gen_standard_cpn rejects degenerate actions") {
    CHECK_THROWS_AS(gen_standard_cpn({0, 1, 1}), DegenerateAction);
    CHECK_THROWS_AS(gen_standard_cpn({4}), DegenerateAction);
    CHECK_THROWS_AS(gen_standard_cpn({}), DegenerateAction);
}

TEST_CASE("gen_product examples") {
    const auto d = gen_product(gen_standard_cpn({0, 1}, true), gen_standard_cpn({0, 2}, true));
    CHECK(d.n == 2);
    REQUIRE(d.size() == 4);
    CHECK(d.points[1].id == "P0*P1");
    CHECK(d.points[1].weights == std::vector<Weight>{1, -2});
    CHECK(d.points[3].moment == BigRational(3));
    CHECK(validate(d).all_ok());
    CHECK(morse_profile(d).betti == BettiVector{1, 2, 1});
}

TEST_CASE("mutations are deterministic and do what they say") {
    const auto base = gen_standard_cpn({0, 1, 2, 4});
    for (auto kind : {MutationKind::FlipWeightSign, MutationKind::PerturbWeight,
                      MutationKind::SwapWeightsBetweenPoints, MutationKind::DropFixedPoint}) {
        CHECK(parse_mutation_kind(to_string(kind)) == kind);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Mutation mut{kind, 2};
            const auto a = mutate(base, mut, seed);
            const auto b = mutate(base, mut, seed);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.points[i].weights == b.points[i].weights);

            std::size_t changed = 0;
            switch (kind) {
            case MutationKind::DropFixedPoint: CHECK(a.size() == base.size() - 1); break;
            case MutationKind::SwapWeightsBetweenPoints:
                for (std::size_t i = 0; i < a.size(); ++i) {
                    changed += a.points[i].weights != base.points[i].weights;
                    CHECK(morse_profile(a).lambda[i] == morse_profile(base).lambda[i]);
                }
                CHECK(changed == 2);
                CHECK(validate(a).hattori_ok);
                break;
            default:
                for (std::size_t i = 0; i < a.size(); ++i) changed += a.points[i].weights != base.points[i].weights;
                CHECK(changed == 1);
                CHECK(validate(a).nonzero_ok);
                break;
            }
            CHECK(first_detecting_stage(a) != DetectionStage::None);
        }
    }
    CHECK_THROWS_AS(parse_mutation_kind("shuffle"), std::invalid_argument);
    CHECK_THROWS_AS(mutate(base, {MutationKind::PerturbWeight, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(mutate(gen_standard_cpn({0, 1}), {MutationKind::SwapWeightsBetweenPoints, 1}, 1),
                    std::invalid_argument);
}
