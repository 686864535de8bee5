#include "hamloc/rigidity.hpp"

#include "hamloc/localization.hpp"

#include <algorithm>
#include <numeric>

namespace hamloc {

std::string to_string(ExtractionError::Kind kind) {
    switch (kind) {
    case ExtractionError::Kind::WrongFixedPointCount: return "WrongFixedPointCount";
    case ExtractionError::Kind::SumGammaNonzero: return "SumGammaNonzero";
    case ExtractionError::Kind::DivisibilityFailure: return "DivisibilityFailure";
    case ExtractionError::Kind::GammaOrderFailure: return "GammaOrderFailure";
    }
    return "?";
}

std::string to_string(RigidityStage stage) {
    switch (stage) {
    case RigidityStage::None: return "none";
    case RigidityStage::Validation: return "validation";
    case RigidityStage::Skeleton: return "skeleton";
    case RigidityStage::CInteger: return "c-integer";
    case RigidityStage::Extraction: return "extraction";
    case RigidityStage::WeightMatch: return "weight-match";
    case RigidityStage::Laurent: return "laurent";
    case RigidityStage::Tolman: return "tolman";
    }
    return "?";
}

std::string to_string(DetectionStage stage) {
    switch (stage) {
    case DetectionStage::None: return "none";
    case DetectionStage::NonzeroWeight: return "nonzero-weight";
    case DetectionStage::Hattori: return "hattori";
    case DetectionStage::SumGamma: return "sum-gamma";
    case DetectionStage::FixedPointCount: return "fixed-point-count";
    case DetectionStage::Divisibility: return "divisibility";
    case DetectionStage::GammaOrder: return "gamma-order";
    case DetectionStage::WeightMatch: return "weight-match";
    case DetectionStage::Laurent: return "laurent";
    }
    return "?";
}

std::vector<std::size_t> morse_order(const FixedPointData& data) {
    const std::size_t expected = static_cast<std::size_t>(data.n) + 1;
    if (data.points.size() != expected) {
        throw ExtractionError(ExtractionError::Kind::WrongFixedPointCount,
                              std::to_string(data.points.size()) + " fixed points, expected n+1 = " +
                                  std::to_string(expected));
    }
    const auto prof = morse_profile(data);
    if (std::any_of(prof.betti.begin(), prof.betti.end(), [](std::int64_t b) { return b != 1; })) {
        throw ExtractionError(ExtractionError::Kind::WrongFixedPointCount,
                              "Betti numbers are not those of CP^n (need one fixed point per Morse index)");
    }
    std::vector<std::size_t> order(data.points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return prof.lambda[x] < prof.lambda[y]; });
    return order;
}

namespace {

std::vector<BigInt> ordered_gamma(const FixedPointData& data, const std::vector<std::size_t>& order) {
    const auto gamma = gamma_values(data);
    std::vector<BigInt> out;
    for (auto idx : order) out.push_back(gamma[idx]);
    return out;
}

void require_gamma_decreasing(const std::vector<BigInt>& gamma) {
    for (std::size_t i = 1; i < gamma.size(); ++i) {
        if (!(gamma[i - 1] > gamma[i])) {
            throw ExtractionError(ExtractionError::Kind::GammaOrderFailure,
                                  "weight sums are not strictly decreasing in the Morse index (gamma_" +
                                      std::to_string(i - 1) + " = " + to_string(gamma[i - 1]) + ", gamma_" +
                                      std::to_string(i) + " = " + to_string(gamma[i]) + ")");
        }
    }
}

std::vector<BigInt> expected_weights(const std::vector<BigInt>& a, std::size_t i) {
    std::vector<BigInt> out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != i) out.push_back(a[i] - a[j]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t to_exponent(const BigInt& z) {
    if (!z.fits_slong_p()) throw DomainError("exponent " + to_string(z) + " does not fit in 64 bits");
    return z.get_si();
}

void require_a_shape(const FixedPointData& data, const std::vector<BigInt>& a) {
    if (a.size() != static_cast<std::size_t>(data.n) + 1) {
        throw std::invalid_argument("expected n+1 = " + std::to_string(data.n + 1) + " integers a_i");
    }
}

} // namespace

ExtractedAD extract_ad(const FixedPointData& data) {
    const auto order = morse_order(data);
    const auto gamma = ordered_gamma(data, order);

    const BigInt total = std::accumulate(gamma.begin(), gamma.end(), BigInt(0));
    if (total != 0) {
        throw ExtractionError(ExtractionError::Kind::SumGammaNonzero,
                              "weight sums add up to " + to_string(total) + " instead of 0");
    }

    const BigInt n1(data.n + 1);
    ExtractedAD out;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        BigInt diff = gamma[i] - gamma[0];
        if (!mpz_divisible_p(diff.get_mpz_t(), n1.get_mpz_t())) {
            throw ExtractionError(ExtractionError::Kind::DivisibilityFailure,
                                  "gamma_" + std::to_string(i) + " - gamma_0 = " + to_string(diff) +
                                      " is not divisible by n+1 = " + to_string(n1));
        }
        out.a.push_back(diff / n1);
    }
    require_gamma_decreasing(gamma);

    // With a_0 = 0 the offset is gamma_0; sum(gamma) = 0 makes it -sum(a).
    out.d = gamma[0];
    return out;
}

std::vector<bool> verify_cpn_weights(const FixedPointData& data, const std::vector<BigInt>& a) {
    require_a_shape(data, a);
    const auto order = morse_order(data);
    std::vector<bool> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<BigInt> actual;
        for (auto w : data.points[order[i]].weights) actual.emplace_back(static_cast<long>(w));
        std::sort(actual.begin(), actual.end());
        out.push_back(actual == expected_weights(a, i));
    }
    return out;
}

std::vector<std::optional<LaurentPoly>> laurent_certificates(const FixedPointData& data,
                                                             const std::vector<BigInt>& a) {
    require_a_shape(data, a);
    const auto order = morse_order(data);
    std::vector<std::optional<LaurentPoly>> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<std::int64_t> num;
        for (const auto& e : expected_weights(a, i)) num.push_back(to_exponent(e));
        const auto& den = data.points[order[i]].weights;
        out.push_back(laurent_ratio(num, den));
    }
    return out;
}

TolmanGenerators tolman_generators(const FixedPointData& data) {
    const auto order = morse_order(data);
    const auto gamma = ordered_gamma(data, order);
    require_gamma_decreasing(gamma);

    TolmanGenerators out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        BigInt denom(1);
        for (std::size_t j = 0; j < i; ++j) denom *= gamma[i] - gamma[j];
        BigRational c(point_invariants(data, order[i]).lambda_minus, denom);
        c.canonicalize();
        out.coeffs.push_back(c);
    }
    out.c1_top = abbv_integral(data, ChernMonomial::c1_power(data.n));

    auto unit = [](const BigRational& q) { return q == 1 || q == -1; };
    const std::size_t n = static_cast<std::size_t>(data.n);
    out.generator_check_ok = unit(out.coeffs[n] * out.c1_top);
    for (std::size_t i = 0; i <= n; ++i) {
        out.generator_check_ok = out.generator_check_ok && unit(out.coeffs[i] * out.coeffs[n - i] * out.c1_top);
    }
    return out;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

RigidityCertificate& fail(RigidityCertificate& cert, RigidityStage stage, std::string reason) {
    cert.passed = false;
    cert.failed_stage = stage;
    cert.reason = std::move(reason);
    return cert;
}

} // namespace

RigidityCertificate rigidity_verdict(const FixedPointData& data, const RigidityOptions& options) {
    RigidityCertificate cert;

    const auto report = validate(data);
    if (!report.all_ok()) return fail(cert, RigidityStage::Validation, join(report.messages));
    const auto prof = morse_profile(data);
    cert.hypotheses_in_scope = data.n <= 5 || prof.unimodal;

    // Any candidate with pseudo-index n+1 has every edge c1 >= n+1, so the
    // search only needs those edges.
    const BigInt target(data.n + 1);
    EnumerationOptions eo;
    eo.cap = options.skeleton_cap;
    eo.min_edge_c1 = target;
    const auto candidates = enumerate_skeletons(data, eo);
    for (std::size_t k = 0; k < candidates.skeletons.size(); ++k) {
        auto analysis = analyze_skeleton(data, candidates.skeletons[k]);
        if (analysis.rho == target) {
            cert.candidate_found = true;
            cert.skeleton_index = k;
            cert.skeleton = candidates.skeletons[k];
            cert.analysis = std::move(analysis);
            break;
        }
    }
    if (!cert.candidate_found) {
        std::string why = "no admissible skeleton candidate with pseudo-index n+1 = " + to_string(target);
        if (candidates.truncated) why += " among the first " + std::to_string(options.skeleton_cap) + " candidates";
        return fail(cert, RigidityStage::Skeleton, why);
    }

    cert.c = c_integer(cert.analysis->rho, data.n, prof.betti);
    cert.all_c1_equal_ok = cert.analysis->all_equal_rho;
    if (cert.c->value != 0 || !cert.all_c1_equal_ok) {
        return fail(cert, RigidityStage::CInteger,
                    "C(n+1, n, b) = " + to_string(cert.c->value) + (cert.all_c1_equal_ok ? "" : ", sphere c1 values differ"));
    }

    try {
        cert.order = morse_order(data);
        auto ad = extract_ad(data);
        cert.a = std::move(ad.a);
        cert.d = ad.d;
        cert.divisibility_ok = true;
        cert.gamma_order_ok = true;
    } catch (const ExtractionError& e) {
        cert.divisibility_ok = e.kind() == ExtractionError::Kind::GammaOrderFailure;
        return fail(cert, RigidityStage::Extraction, to_string(e.kind()) + ": " + e.what());
    }

    cert.weight_match = verify_cpn_weights(data, cert.a);
    for (std::size_t i = 0; i < cert.weight_match.size(); ++i) {
        if (!cert.weight_match[i]) {
            return fail(cert, RigidityStage::WeightMatch,
                        "weights at '" + data.points[cert.order[i]].id + "' are not {a_i - a_j}");
        }
    }

    cert.laurent = laurent_certificates(data, cert.a);
    for (const auto& l : cert.laurent) cert.laurent_ok.push_back(l.has_value());
    for (std::size_t i = 0; i < cert.laurent_ok.size(); ++i) {
        if (!cert.laurent_ok[i]) {
            return fail(cert, RigidityStage::Laurent,
                        "Laurent quotient at '" + data.points[cert.order[i]].id + "' is not a Laurent polynomial");
        }
    }

    auto tg = tolman_generators(data);
    cert.tolman_coeffs = std::move(tg.coeffs);
    cert.c1_top = tg.c1_top;
    cert.generator_check_ok = tg.generator_check_ok;
    if (!cert.generator_check_ok) {
        return fail(cert, RigidityStage::Tolman, "Tolman generators do not give the cohomology ring of CP^n");
    }

    cert.passed = true;
    return cert;
}

DetectionStage first_detecting_stage(const FixedPointData& data) {
    const auto report = validate(data);
    if (!report.nonzero_ok) return DetectionStage::NonzeroWeight;
    if (!report.hattori_ok) return DetectionStage::Hattori;
    const auto gamma = gamma_values(data);
    if (std::accumulate(gamma.begin(), gamma.end(), BigInt(0)) != 0) return DetectionStage::SumGamma;

    ExtractedAD ad;
    try {
        ad = extract_ad(data);
    } catch (const ExtractionError& e) {
        switch (e.kind()) {
        case ExtractionError::Kind::WrongFixedPointCount: return DetectionStage::FixedPointCount;
        case ExtractionError::Kind::SumGammaNonzero: return DetectionStage::SumGamma;
        case ExtractionError::Kind::DivisibilityFailure: return DetectionStage::Divisibility;
        case ExtractionError::Kind::GammaOrderFailure: return DetectionStage::GammaOrder;
        }
    }
    const auto match = verify_cpn_weights(data, ad.a);
    if (std::find(match.begin(), match.end(), false) != match.end()) return DetectionStage::WeightMatch;
    const auto laurent = laurent_certificates(data, ad.a);
    if (std::any_of(laurent.begin(), laurent.end(), [](const auto& l) { return !l.has_value(); })) {
        return DetectionStage::Laurent;
    }
    return DetectionStage::None;
}

} // namespace hamloc
