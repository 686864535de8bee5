#include "hamloc/selftest.hpp"

#include "hamloc/betti_chern.hpp"
#include "hamloc/corpus.hpp"
#include "hamloc/localization.hpp"
#include "hamloc/rigidity.hpp"
#include "hamloc/skeleton.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace hamloc {

namespace {

std::vector<std::int64_t> consecutive(int n) {
    std::vector<std::int64_t> m;
    for (int i = 0; i <= n; ++i) m.push_back(i);
    return m;
}

// 0, 1, 3, 7, ...: all differences distinct.
std::vector<std::int64_t> spread(int n) {
    std::vector<std::int64_t> m;
    for (int i = 0; i <= n; ++i) m.push_back((std::int64_t{1} << i) - 1);
    return m;
}

std::string tuple_name(const std::vector<std::int64_t>& m) {
    std::string s = "CP" + std::to_string(m.size() - 1) + "(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

CriterionResult make(std::string name, const std::vector<std::string>& failures, std::string ok_detail) {
    CriterionResult r;
    r.name = std::move(name);
    r.passed = failures.empty();
    if (r.passed) {
        r.detail = std::move(ok_detail);
    } else {
        r.detail = failures.front();
        if (failures.size() > 1) r.detail += " (+" + std::to_string(failures.size() - 1) + " more)";
    }
    return r;
}

} // namespace

std::vector<NamedDataset> builtin_corpus(int max_n) {
    std::vector<NamedDataset> out;
    for (int n = 1; n <= max_n; ++n) {
        out.push_back({tuple_name(consecutive(n)), gen_standard_cpn(consecutive(n))});
        if (n >= 2) out.push_back({tuple_name(spread(n)), gen_standard_cpn(spread(n))});
    }
    out.push_back({"CP1(0,1)xCP1(0,2)", gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2}))});
    for (int a = 1; a <= max_n; ++a) {
        for (int b = a; a + b <= max_n; ++b) {
            out.push_back({tuple_name(consecutive(a)) + "x" + tuple_name(consecutive(b)),
                           gen_product(gen_standard_cpn(consecutive(a)), gen_standard_cpn(consecutive(b)))});
            out.push_back({tuple_name(consecutive(a)) + "x" + tuple_name(spread(b)),
                           gen_product(gen_standard_cpn(consecutive(a)), gen_standard_cpn(spread(b)))});
        }
    }
    return out;
}

std::vector<std::vector<int>> chern_monomials_of_degree(int degree, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Nonincreasing parts so every monomial appears once.
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(degree, n);
    return out;
}

CriterionResult criterion_cpn_rigidity() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> pick_n(1, 8);
    std::uniform_int_distribution<std::int64_t> pick_m(-50, 50);
    std::vector<std::string> failures;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = pick_n(rng);
        std::set<std::int64_t> chosen;
        while (chosen.size() < static_cast<std::size_t>(n) + 1) chosen.insert(pick_m(rng));
        const std::vector<std::int64_t> m(chosen.begin(), chosen.end());
        const auto data = gen_standard_cpn(m);
        const auto cert = rigidity_verdict(data);
        const std::string name = tuple_name(m);
        if (!cert.passed) {
            failures.push_back(name + ": FAIL at " + to_string(cert.failed_stage) + ": " + cert.reason);
            continue;
        }
        if (cert.analysis->rho != n + 1) failures.push_back(name + ": rho = " + to_string(cert.analysis->rho));
        const auto c = c_integer(BigInt(n + 1), n, BettiVector(static_cast<std::size_t>(n) + 1, 1));
        if (c.value != 0) failures.push_back(name + ": C(n+1, n, 1) = " + to_string(c.value));
        BigRational tau1_top = cert.c1_top;
        for (int k = 0; k < n; ++k) tau1_top *= cert.tolman_coeffs[1];
        if (tau1_top != 1) failures.push_back(name + ": \\int tau_1^n = " + to_string(tau1_top));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) failures.push_back("took " + std::to_string(secs) + " s (limit 10 s)");
    std::ostringstream ok;
    ok << "50 random tuples, n in 1..8, |m| <= 50: PASS, rho = n+1, C = 0, \\int tau_1^n = 1 (" << secs << " s)";
    return make("CP^n rigidity", failures, ok.str());
}

CriterionResult criterion_chern_betti_identity() {
    std::vector<std::string> failures;
    auto corpus = builtin_corpus(6);
    for (const auto& [name, data] : corpus) {
        const auto localized = chern_number_c1cn1(data);
        const auto from_betti = chern_number_from_betti(data.n, morse_profile(data).betti);
        if (localized != from_betti) {
            failures.push_back(name + ": localized " + to_string(localized) + " vs Betti formula " + to_string(from_betti));
        }
    }
    const auto cp1xcp1 = gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2}));
    if (chern_number_c1cn1(cp1xcp1) != 8 || chern_number_from_betti(2, {1, 2, 1}) != 8) {
        failures.push_back("CP1(1)xCP1(2) spot value is not 8");
    }
    const auto cp3 = gen_standard_cpn({0, 1, 2, 4});
    if (chern_number_c1cn1(cp3) != 24 || chern_number_from_betti(3, {1, 1, 1, 1}) != 24) {
        failures.push_back("CP3(0,1,2,4) spot value is not 24");
    }
    return make("Chern number from Betti numbers", failures,
                std::to_string(corpus.size()) + " corpus datasets agree with localization; spot values 8 and 24");
}

CriterionResult criterion_abbv_identities() {
    std::vector<std::string> failures;
    std::size_t integrals = 0;
    auto corpus = builtin_corpus(6);
    for (const auto& [name, data] : corpus) {
        for (int deg = 0; deg <= data.n; ++deg) {
            for (const auto& idx : chern_monomials_of_degree(deg, data.n)) {
                const ChernMonomial mono(idx);
                const auto v = abbv_integral(data, mono);
                ++integrals;
                if (deg < data.n && v != 0) failures.push_back(name + ": \\int " + mono.to_string() + " = " + to_string(v));
                if (deg == data.n && !is_integer(v)) {
                    failures.push_back(name + ": \\int " + mono.to_string() + " = " + to_string(v) + " is not an integer");
                }
            }
        }
        const auto top = abbv_integral(data, ChernMonomial({data.n}));
        if (top != morse_profile(data).euler) failures.push_back(name + ": \\int c_n = " + to_string(top) + " != chi");
    }
    return make("Localization identities", failures,
                std::to_string(integrals) + " integrals over " + std::to_string(corpus.size()) +
                    " datasets: vanishing below top degree, integral at top degree, \\int c_n = chi");
}

CriterionResult criterion_c_integer_consistency() {
    std::vector<std::string> failures;
    std::size_t checked = 0;
    for (const auto& [name, data] : builtin_corpus(6)) {
        const auto betti = morse_profile(data).betti;
        const auto sks = enumerate_skeletons(data, kCorpusSkeletonCap, false);
        for (const auto& sk : sks.skeletons) {
            const auto a = analyze_skeleton(data, sk);
            const auto c = c_integer(a.rho, data.n, betti);
            ++checked;
            const BigInt direct = a.c1_sum - a.rho * BigInt(static_cast<unsigned long>(a.edge_count));
            if (c.value != direct) {
                failures.push_back(name + ": C = " + to_string(c.value) + " but c1 sum - rho |E| = " + to_string(direct));
            } else if (c.value < 0) {
                failures.push_back(name + ": C = " + to_string(c.value) + " < 0");
            } else if ((c.value == 0) != a.all_equal_rho) {
                failures.push_back(name + ": C = " + to_string(c.value) + " but all_equal_rho = " +
                                   (a.all_equal_rho ? "true" : "false"));
            }
        }
    }
    return make("C-integer consistency", failures,
                std::to_string(checked) + " skeleton candidates: C = c1 sum - rho |E| >= 0, zero iff all c1 equal");
}

CriterionResult criterion_pseudo_index_bounds() {
    std::vector<std::string> failures;
    std::size_t checked = 0;
    for (const auto& [name, data] : builtin_corpus(6)) {
        const auto prof = morse_profile(data);
        const auto sks = enumerate_skeletons(data, kCorpusSkeletonCap, false);
        for (const auto& sk : sks.skeletons) {
            const auto a = analyze_skeleton(data, sk);
            ++checked;
            if (a.rho > 2 * data.n) failures.push_back(name + ": rho = " + to_string(a.rho) + " > 2n");
            if (prof.unimodal && a.rho > data.n + 1) {
                failures.push_back(name + ": unimodal but rho = " + to_string(a.rho) + " > n+1");
            }
        }
    }

    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> pick_n(1, 10);
    std::uniform_int_distribution<int> step(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = pick_n(rng);
        BettiVector b(static_cast<std::size_t>(n) + 1, 0);
        std::int64_t cur = 1;
        for (int k = 0; k <= n / 2; ++k) {
            if (k > 0) cur += step(rng);
            b[static_cast<std::size_t>(k)] = cur;
            b[static_cast<std::size_t>(n - k)] = cur;
        }
        const auto c = c_integer(BigInt(n + 2), n, b);
        if (!(c.value < 0)) {
            std::string bs;
            for (auto x : b) bs += std::to_string(x) + " ";
            failures.push_back("unimodal b = ( " + bs + "), rho = n+2: C = " + to_string(c.value) + " >= 0");
        }
    }
    return make("Pseudo-index bounds", failures,
                std::to_string(checked) + " candidates satisfy rho <= 2n (and <= n+1 when unimodal); "
                                          "C(n+2, n, b) < 0 for 100 random unimodal b");
}

CriterionResult criterion_matching_independence() {
    std::vector<std::string> failures;
    const auto data = gen_product(gen_standard_cpn({0, 1}), gen_standard_cpn({0, 2}));
    const auto sks = enumerate_skeletons(data, 100, false);
    if (sks.skeletons.size() != 4) failures.push_back(std::to_string(sks.skeletons.size()) + " candidates, expected 4");
    std::set<long> rhos;
    for (const auto& sk : sks.skeletons) {
        const auto a = analyze_skeleton(data, sk);
        if (a.c1_sum != 8) failures.push_back("candidate with c1 sum " + to_string(a.c1_sum));
        rhos.insert(a.rho.get_si());
    }
    // The first candidate pairs points along the factors.
    if (!sks.skeletons.empty() && analyze_skeleton(data, sks.skeletons.front()).rho != 2) {
        failures.push_back("product matching does not have rho = 2");
    }
    std::string observed = "{";
    for (auto r : rhos) observed += (observed.size() > 1 ? ", " : "") + std::to_string(r);
    observed += "}";
    if (rhos != std::set<long>{2, -2}) {
        failures.push_back("pseudo-indices across candidates are " + observed + ", expected {-2, 2}");
    }
    return make("Matching independence", failures,
                "4 candidates, all with c1 sum 8, pseudo-indices " + observed + ", product matching rho = 2");
}

CriterionResult criterion_mutation_detection() {
    std::vector<std::string> failures;
    const auto base = gen_standard_cpn({0, 1, 2, 4});
    std::string summary;
    for (auto kind : {MutationKind::FlipWeightSign, MutationKind::PerturbWeight, MutationKind::SwapWeightsBetweenPoints,
                      MutationKind::DropFixedPoint}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Mutation mut{kind, 1};
            const auto first = first_detecting_stage(mutate(base, mut, seed));
            const auto again = first_detecting_stage(mutate(base, mut, seed));
            const auto name = to_string(kind) + " seed " + std::to_string(seed);
            if (first == DetectionStage::None) failures.push_back(name + " went undetected");
            if (first != again) failures.push_back(name + " detected by different stages across runs");
            if (seed == 1) summary += (summary.empty() ? "" : ", ") + to_string(kind) + " -> " + to_string(first);
        }
    }
    if (first_detecting_stage(base) != DetectionStage::None) failures.push_back("unmutated CP3(0,1,2,4) was rejected");
    return make("Mutation detection", failures, "all 4 kinds x 5 seeds detected, stable (seed 1: " + summary + ")");
}

CriterionResult criterion_laurent_oracle() {
    std::vector<std::string> failures;
    std::mt19937_64 rng(4242);
    auto nonzero = [&](int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        int v = 0;
        while (v == 0) v = d(rng);
        return static_cast<std::int64_t>(v);
    };
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> mult(1, 3);
    auto reconstructs = [](const LaurentPoly& q, const std::vector<std::int64_t>& num,
                           const std::vector<std::int64_t>& den) {
        return q * product_one_minus(den) == product_one_minus(num);
    };

    for (int trial = 0; trial < 1000; ++trial) {
        // (1 - t^(kq)) is divisible by (1 - t^q); extra numerator factors and
        // shared factors keep the quotient in Z[t, 1/t].
        std::vector<std::int64_t> num, den;
        for (int i = 0, l = len(rng); i < l; ++i) {
            const auto q = nonzero(-9, 9);
            den.push_back(q);
            num.push_back(q * mult(rng) * (nonzero(-1, 1)));
        }
        for (int i = 0, l = len(rng); i < l; ++i) num.push_back(nonzero(-12, 12));
        for (int i = 0, l = len(rng); i < l; ++i) {
            const auto c = nonzero(-12, 12);
            num.push_back(c);
            den.push_back(c);
        }
        std::shuffle(num.begin(), num.end(), rng);
        std::shuffle(den.begin(), den.end(), rng);
        const auto q = laurent_ratio(num, den);
        if (!q) {
            failures.push_back("constructed divisible pair reported NotDivisible (trial " + std::to_string(trial) + ")");
        } else if (!reconstructs(*q, num, den)) {
            failures.push_back("quotient does not reconstruct the numerator (trial " + std::to_string(trial) + ")");
        }
    }

    std::size_t divisible = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::int64_t> num, den;
        for (int i = 0, l = len(rng) + 1; i < l; ++i) num.push_back(nonzero(-10, 10));
        for (int i = 0, l = len(rng) + 1; i < l; ++i) den.push_back(nonzero(-6, 6));
        const auto q = laurent_ratio(num, den);
        if (!q) continue;
        ++divisible;
        if (!reconstructs(*q, num, den)) {
            failures.push_back("random pair quotient does not reconstruct (trial " + std::to_string(trial) + ")");
        }
    }
    return make("Laurent division oracle", failures,
                "1000 constructed pairs divide and reconstruct; 1000 random pairs, " + std::to_string(divisible) +
                    " divisible, all reconstruct");
}

std::vector<CriterionResult> run_acceptance_suite() {
    return {criterion_cpn_rigidity(),          criterion_chern_betti_identity(),  criterion_abbv_identities(),
            criterion_c_integer_consistency(), criterion_pseudo_index_bounds(),    criterion_matching_independence(),
            criterion_mutation_detection(),    criterion_laurent_oracle()};
}

} // namespace hamloc
