#pragma once

// Dataset generators: standard actions on projective space, diagonal
// actions on products, and seeded mutations for negative tests.

#include "hamloc/fixed_point.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamloc {

class DegenerateAction : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fixed points P_0..P_n of lambda.[z_0 : ... : z_n] = [lambda^m_0 z_0 : ... : lambda^m_n z_n];
/// P_j has weights {m_i - m_j : i != j} in index order. With `with_moments`
/// every point gets the synthetic moment value m_j, so that the point with
/// all weights positive is the minimum when m is increasing.
/// Throws DegenerateAction on repeated entries or fewer than two entries.
FixedPointData gen_standard_cpn(const std::vector<std::int64_t>& m, bool with_moments = false);

/// Diagonal action on the product: one point per pair, ids "a*b", weights
/// concatenated, moments added when both factors carry them.
FixedPointData gen_product(const FixedPointData& first, const FixedPointData& second);

enum class MutationKind { FlipWeightSign, PerturbWeight, SwapWeightsBetweenPoints, DropFixedPoint };

struct Mutation {
    MutationKind kind = MutationKind::FlipWeightSign;
    std::int64_t delta = 1;  // PerturbWeight only
};

std::string to_string(MutationKind kind);
/// Accepts "flip-sign", "perturb", "swap", "drop". Throws std::invalid_argument.
MutationKind parse_mutation_kind(const std::string& name);

/// Deterministic in (data, mutation, seed). The result is usually not a
/// valid dataset.
///  - FlipWeightSign: negates one weight.
///  - PerturbWeight: adds delta to one weight, skipping weights that would
///    become zero.
///  - SwapWeightsBetweenPoints: exchanges two distinct weights of the same
///    sign between two points, so W+ and W- and all Morse indices survive.
///  - DropFixedPoint: removes one point.
/// Throws std::invalid_argument when the kind has no valid site (e.g. no
/// swappable pair).
FixedPointData mutate(const FixedPointData& data, const Mutation& mutation, std::uint64_t seed);

} // namespace hamloc
