#pragma once

// Certifies that fixed-point data with n+1 fixed points and pseudo-index
// n+1 has exactly the weights of a standard circle action on CP^n:
// there are integers a_0 > ... > a_n with weights {a_i - a_j : j != i} at
// the point with i negative weights.

#include "hamloc/betti_chern.hpp"
#include "hamloc/exact.hpp"
#include "hamloc/fixed_point.hpp"
#include "hamloc/skeleton.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamloc {

/// Point indices sorted by number of negative weights (stable). Throws
/// ExtractionError(WrongFixedPointCount) unless there are exactly n+1 points,
/// one for each Morse index.
std::vector<std::size_t> morse_order(const FixedPointData& data);

class ExtractionError : public std::runtime_error {
public:
    enum class Kind { WrongFixedPointCount, SumGammaNonzero, DivisibilityFailure, GammaOrderFailure };

    ExtractionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::string to_string(ExtractionError::Kind kind);

struct ExtractedAD {
    std::vector<BigInt> a;  // by Morse index, strictly decreasing, a_0 = 0
    BigInt d;               // gamma_i = (n+1) a_i + d, and d = -sum a_j
};

/// a_i = (gamma_i - gamma_0)/(n+1), d = gamma_0. Throws ExtractionError.
ExtractedAD extract_ad(const FixedPointData& data);

/// Entry i (Morse index) is true iff the weights of P_i are {a_i - a_j : j != i}.
std::vector<bool> verify_cpn_weights(const FixedPointData& data, const std::vector<BigInt>& a);

/// Entry i is prod_{j != i}(1 - t^(a_i - a_j)) / prod_k (1 - t^w_ik) when that
/// quotient is an integer Laurent polynomial, else empty.
std::vector<std::optional<LaurentPoly>> laurent_certificates(const FixedPointData& data,
                                                             const std::vector<BigInt>& a);

struct TolmanGenerators {
    /// coeffs[i] = Lambda_i^- / prod_{j<i} (gamma_i - gamma_j), so that
    /// tau_i = coeffs[i] c_1^i.
    std::vector<BigRational> coeffs;
    BigRational c1_top;  // \int c_1^n
    bool generator_check_ok = false;
};

/// Throws ExtractionError unless there are n+1 points with strictly
/// decreasing gamma in Morse order.
TolmanGenerators tolman_generators(const FixedPointData& data);

enum class RigidityStage { None, Validation, Skeleton, CInteger, Extraction, WeightMatch, Laurent, Tolman };
std::string to_string(RigidityStage stage);

struct RigidityOptions {
    std::size_t skeleton_cap = 10000;
};

struct RigidityCertificate {
    bool passed = false;
    RigidityStage failed_stage = RigidityStage::None;
    std::string reason;  // empty on PASS

    /// n <= 5 or unimodal Betti numbers; otherwise a PASS is outside the
    /// theorem's hypotheses.
    bool hypotheses_in_scope = false;
    bool candidate_found = false;
    /// Index of the candidate used, counted among candidates whose every
    /// edge has c1 >= n+1.
    std::optional<std::size_t> skeleton_index;
    std::optional<ToricSkeleton> skeleton;
    std::optional<SkeletonAnalysis> analysis;
    std::optional<CIntegerBreakdown> c;
    bool all_c1_equal_ok = false;

    std::vector<std::size_t> order;  // file index of P_i
    std::vector<BigInt> a;
    BigInt d;
    bool divisibility_ok = false;
    bool gamma_order_ok = false;
    std::vector<bool> weight_match;
    std::vector<std::optional<LaurentPoly>> laurent;
    std::vector<bool> laurent_ok;
    std::vector<BigRational> tolman_coeffs;
    BigRational c1_top;
    bool generator_check_ok = false;
};

/// Runs validation, skeleton search, C-integer, extraction, weight match,
/// Laurent certificates and Tolman generators in that order, stopping at the
/// first failing stage.
RigidityCertificate rigidity_verdict(const FixedPointData& data, const RigidityOptions& options = {});

/// Weight-level stages used to classify corrupted data.
enum class DetectionStage { None, NonzeroWeight, Hattori, SumGamma, FixedPointCount, Divisibility, GammaOrder, WeightMatch, Laurent };
std::string to_string(DetectionStage stage);

/// First weight-level stage that rejects `data`, None if all pass.
DetectionStage first_detecting_stage(const FixedPointData& data);

} // namespace hamloc
