#pragma once

// The acceptance checks, runnable from the CLI (`hamloc selftest`) and from
// the acceptance test binary.

#include "hamloc/fixed_point.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hamloc {

struct NamedDataset {
    std::string name;
    FixedPointData data;
};

/// Standard CP^n for n <= max_n (consecutive and spread-out exponents) and
/// every product of two of them with total dimension n <= max_n.
std::vector<NamedDataset> builtin_corpus(int max_n = 6);

/// All Chern monomials of the given degree with indices in [1, n].
std::vector<std::vector<int>> chern_monomials_of_degree(int degree, int n);

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Skeleton candidates examined per corpus dataset.
inline constexpr std::size_t kCorpusSkeletonCap = 2000;

CriterionResult criterion_cpn_rigidity();
CriterionResult criterion_chern_betti_identity();
CriterionResult criterion_abbv_identities();
CriterionResult criterion_c_integer_consistency();
CriterionResult criterion_pseudo_index_bounds();
CriterionResult criterion_matching_independence();
CriterionResult criterion_mutation_detection();
CriterionResult criterion_laurent_oracle();

std::vector<CriterionResult> run_acceptance_suite();

} // namespace hamloc
