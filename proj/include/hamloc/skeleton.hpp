#pragma once

// Candidate toric 1-skeletons.
//
// A candidate pairs every positive weight occurrence w with an occurrence of
// -w at a different fixed point. Such a pairing is only an *admissible
// candidate*: it satisfies the checkable necessary conditions (integral
// sphere Chern numbers, optionally moment order) but nothing here can show
// that the invariant spheres actually exist.

#include "hamloc/exact.hpp"
#include "hamloc/fixed_point.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hamloc {

struct SkeletonEdge {
    std::size_t source = 0;  // point carrying +w
    std::size_t target = 0;  // point carrying -w
    Weight w = 0;            // > 0
    BigInt c1;               // (gamma_source - gamma_target) / w

    friend bool operator==(const SkeletonEdge&, const SkeletonEdge&) = default;
};

struct ToricSkeleton {
    std::vector<SkeletonEdge> edges;  // weight ascending, then by source occurrence
};

struct SkeletonEnumeration {
    std::vector<ToricSkeleton> skeletons;
    bool truncated = false;  // more candidates exist beyond the cap
};

struct EnumerationOptions {
    std::size_t cap = 1000;
    bool use_moment_filter = false;
    /// Discard edges whose c1 is below this value; used to search directly
    /// for a skeleton with a prescribed pseudo-index.
    std::optional<BigInt> min_edge_c1;
};

/// All admissible candidates in canonical order, up to options.cap.
///
/// Order: weight values ascending (most significant first); within a value
/// positive occurrences in file order, each matched to target points in
/// ascending file order. Pairings that only permute repeated weights at the
/// same point are reported once.
SkeletonEnumeration enumerate_skeletons(const FixedPointData& data, const EnumerationOptions& options);
SkeletonEnumeration enumerate_skeletons(const FixedPointData& data, std::size_t cap, bool use_moment_filter);

/// Empty when `s` is a valid pairing for `data`, else a description.
std::optional<std::string> skeleton_structure_error(const FixedPointData& data, const ToricSkeleton& s);

struct SkeletonAnalysis {
    BigInt rho;     // pseudo-index: minimum edge c1
    BigInt c1_sum;
    BigInt c1_gcd;  // gcd of the edge c1 values, >= 0
    bool all_equal_rho = false;
    std::size_t edge_count = 0;
};

/// Throws std::invalid_argument on a structurally invalid skeleton and
/// std::logic_error if the c1 sum disagrees with the localized Chern number.
SkeletonAnalysis analyze_skeleton(const FixedPointData& data, const ToricSkeleton& s);

} // namespace hamloc
