#include "doctest.h"
#include "oracles.hpp"

#include "hamloc/corpus.hpp"
#include "hamloc/localization.hpp"
#include "hamloc/selftest.hpp"

using namespace hamloc;

namespace {

// Each fixed point contributes prod_j e_{k_j}(w) / prod(w); recomputed here
// with subset-sum elementary symmetric polynomials.
BigRational localize_by_subsets(const FixedPointData& d, const std::vector<int>& idx) {
    BigRational total = 0;
    for (const auto& p : d.points) {
        BigInt num = 1;
        for (int k : idx) num *= oracle::elem_sym_subsets(static_cast<std::size_t>(k), p.weights);
        BigRational term(num, oracle::elem_sym_subsets(p.weights.size(), p.weights));
        term.canonicalize();
        total += term;
    }
    return total;
}

} // namespace

TEST_CASE("ChernMonomial basics") {
    ChernMonomial m({2, 1, 1});
    CHECK(m.degree() == 4);
    CHECK(m.indices() == std::vector<int>{1, 1, 2});
    CHECK(m.to_string() == "c1*c1*c2");
    CHECK(ChernMonomial().degree() == 0);
    CHECK(ChernMonomial().to_string() == "1");
    CHECK(ChernMonomial::c1_power(3).indices() == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(ChernMonomial({0}), DomainError);
}

TEST_CASE("abbv_integral examples") {
    const auto cp2 = gen_standard_cpn({0, 1, 3});
    // 1/3 - 1/2 + 1/6
    CHECK(abbv_integral(cp2, ChernMonomial()) == 0);
    // 16/3 - 1/2 + 25/6
    CHECK(abbv_integral(cp2, ChernMonomial({1, 1})) == 9);
    CHECK(abbv_integral(cp2, ChernMonomial({2})) == 3);

    const auto cp1xcp1 = gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2}));
    // 9/2 - 1/2 - 1/2 + 9/2
    CHECK(abbv_integral(cp1xcp1, ChernMonomial({1, 1})) == 8);
    CHECK(abbv_integral(cp1xcp1, ChernMonomial({2})) == 4);
    CHECK(abbv_integral(cp1xcp1, ChernMonomial({1})) == 0);
}

TEST_CASE("abbv_integral rejects classes above top degree") {
    const auto cp2 = gen_standard_cpn({0, 1, 3});
    CHECK_THROWS_AS(abbv_integral(cp2, ChernMonomial({1, 1, 1})), DomainError);
    CHECK_THROWS_AS(abbv_integral(cp2, ChernMonomial({3})), DomainError);

    FixedPointData zero;
    zero.n = 1;
    zero.points = {{"a", {0}, {}}, {"b", {-1}, {}}};
    CHECK_THROWS_AS(abbv_integral(zero, ChernMonomial({1})), InvalidDataset);
}

TEST_CASE("chern_number_c1cn1 examples") {
    CHECK(chern_number_c1cn1(gen_standard_cpn({0, 1, 3})) == 9);
    CHECK(chern_number_c1cn1(gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2}))) == 8);
    CHECK(chern_number_c1cn1(gen_standard_cpn({0, 1, 2, 4})) == 24);
    CHECK(chern_number_c1cn1(gen_standard_cpn({0, 1})) == 2);

    // Two points with weights {1, 2} and {-1, -3}: localizes to a non-integer.
    FixedPointData fake;
    fake.n = 2;
    fake.points = {{"a", {1, 2}, {}}, {"b", {-1, -3}, {}}};
    CHECK_THROWS_AS(chern_number_c1cn1(fake), InvalidDataset);
}

TEST_CASE("Chern numbers of CP^a x CP^b match the total Chern class") {
    struct Case {
        std::vector<std::int64_t> m1, m2;
    };
    const std::vector<Case> cases = {
        {{0, 1, 3}, {}},        {{-2, 0, 5, 6}, {}},  {{0, 1, 2, 3, 4}, {}},
        {{0, 1}, {0, 2}},       {{0, 1, 3}, {1, 2}},  {{0, 2, 3}, {-1, 4, 9}},
    };
    for (const auto& c : cases) {
        const auto data = c.m2.empty() ? gen_standard_cpn(c.m1)
                                       : gen_product(gen_standard_cpn(c.m1), gen_standard_cpn(c.m2));
        const int a = static_cast<int>(c.m1.size()) - 1;
        const int b = c.m2.empty() ? 0 : static_cast<int>(c.m2.size()) - 1;
        for (int deg = 0; deg <= data.n; ++deg) {
            for (const auto& idx : chern_monomials_of_degree(deg, data.n)) {
                const auto value = abbv_integral(data, ChernMonomial(idx));
                CHECK(value == localize_by_subsets(data, idx));
                CHECK(value == BigRational(oracle::product_chern_number(a, b, idx)));
            }
        }
    }
}

TEST_CASE("top-degree integrals are invariant under scaling the weights") {
    const std::vector<FixedPointData> sets = {
        gen_standard_cpn({0, 1, 2, 4}),
        gen_product(gen_standard_cpn({0, 1, 3}), gen_standard_cpn({0, 2})),
    };
    for (const auto& d : sets) {
        for (Weight s : {2, 3, 7}) {
            auto scaled = d;
            for (auto& p : scaled.points) {
                for (auto& w : p.weights) w *= s;
            }
            for (const auto& idx : chern_monomials_of_degree(d.n, d.n)) {
                CHECK(abbv_integral(scaled, ChernMonomial(idx)) == abbv_integral(d, ChernMonomial(idx)));
            }
        }
    }
}

TEST_CASE("c_n integrates to the number of fixed points") {
    for (const auto& [name, d] : builtin_corpus(4)) {
        CAPTURE(name);
        CHECK(abbv_integral(d, ChernMonomial({d.n})) == static_cast<long>(d.size()));
    }
}
