#pragma once

// Fixed-point data of a circle action with isolated fixed points, and the
// structural checks that only need the weights.

#include "hamloc/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamloc {

using Weight = std::int64_t;

/// The data cannot describe fixed points of a circle action (wrong shape,
/// duplicate ids, zero weight, non-integral invariant, ...).
class InvalidDataset : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FixedPoint {
    std::string id;
    std::vector<Weight> weights;  // multiset; order is irrelevant
    std::optional<BigRational> moment;
};

/// Half-dimension n and the fixed points in file order.
///
/// Aggregate so that tests and the mutation fuzzer can build malformed data;
/// use `make` to get a dataset whose shape invariants are checked.
struct FixedPointData {
    int n = 0;
    std::vector<FixedPoint> points;
    bool synthetic_moments = false;

    /// Checks n >= 1, unique non-empty ids, every weight list of length n and
    /// every weight nonzero. Throws InvalidDataset.
    static FixedPointData make(int n, std::vector<FixedPoint> points, bool synthetic_moments = false);

    std::size_t size() const { return points.size(); }
    std::optional<std::size_t> index_of(const std::string& id) const;
};

/// weight value -> multiplicity, multiplicities always positive.
using WeightMultiset = std::map<Weight, std::size_t>;

WeightMultiset positive_weights(const FixedPointData& data);
/// Stored negated: the negative weights -w are keyed by w, so that the
/// symmetry check is positive_weights(d) == negated_negative_weights(d).
WeightMultiset negated_negative_weights(const FixedPointData& data);

/// b_0, b_2, ..., b_2n as a vector of n+1 counts.
using BettiVector = std::vector<std::int64_t>;

bool is_unimodal(const BettiVector& b);
bool is_poincare_symmetric(const BettiVector& b);

struct MorseProfile {
    std::vector<int> lambda;  // number of negative weights, per point in file order
    BettiVector betti;
    std::int64_t euler = 0;
    bool unimodal = false;
};

MorseProfile morse_profile(const FixedPointData& data);

struct PointInvariants {
    int lambda = 0;
    BigInt gamma;         // sum of the weights
    BigInt lambda_minus;  // product of the negative weights, 1 if none
};

/// Throws std::out_of_range for a bad index.
PointInvariants point_invariants(const FixedPointData& data, std::size_t i);

/// Sum of the weights at every point, file order.
std::vector<BigInt> gamma_values(const FixedPointData& data);

struct ValidationReport {
    bool hattori_ok = false;
    bool nonzero_ok = false;
    bool min_count_ok = false;
    bool poincare_ok = false;
    bool unimodal = false;
    bool moment_consistent = false;
    std::vector<std::string> messages;

    /// Every flag except `unimodal`, which is a property rather than a check.
    bool all_ok() const {
        return hattori_ok && nonzero_ok && min_count_ok && poincare_ok && moment_consistent;
    }
};

/// Never throws for data with weight lists of length n; problems become
/// flags plus a message each.
ValidationReport validate(const FixedPointData& data);

} // namespace hamloc
