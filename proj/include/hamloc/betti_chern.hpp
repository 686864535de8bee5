#pragma once

// Chern numbers from Betti numbers, and the pseudo-index bound certificates
// built on the integer C(rho, n, b).

#include "hamloc/exact.hpp"
#include "hamloc/fixed_point.hpp"
#include "hamloc/skeleton.hpp"

#include <optional>
#include <vector>

namespace hamloc {

/// \int c1 c_{n-1} = sum_k [6k(k-1) + (5n - 3n^2)/2] b_2k.
/// Throws DomainError if b does not have n+1 entries or the sum is not an
/// integer.
BigInt chern_number_from_betti(int n, const BettiVector& b);

struct CIntegerBreakdown {
    BigInt value;                 // C(rho, n, b)
    std::vector<BigInt> coeffs_A; // A_i(rho, n), i = 0 .. floor(n/2); C = sum A_i b_2i
    BigInt m_value;               // sum of coeffs_A = n(n+1)(n+1-rho)/2
    /// min { i : A_i <= 0 }; empty when every A_i is positive (small rho).
    std::optional<int> lambda_index;
};

/// A_i(rho, n) for i = 0 .. floor(n/2).
std::vector<BigInt> c_integer_coefficients(const BigInt& rho, int n);

/// C(rho, n, b) from its parity-split closed form, cross-checked against
/// \int c1 c_{n-1} - rho (n/2) chi. b must have n+1 entries and satisfy
/// b_2k = b_2(n-k) (DomainError otherwise); a disagreement between the two
/// forms throws std::logic_error.
CIntegerBreakdown c_integer(const BigInt& rho, int n, const BettiVector& b);

struct BoundReport {
    BigInt rho;
    bool bound_2n_ok = false;
    bool unimodal_applicable = false;
    bool bound_n_plus_1_ok = false;
    bool c_nonneg_ok = false;
    bool c_zero_iff_all_equal_ok = false;
    std::optional<CIntegerBreakdown> c;  // empty when b is not Poincare-symmetric

    bool all_ok() const {
        return bound_2n_ok && bound_n_plus_1_ok && c_nonneg_ok && c_zero_iff_all_equal_ok;
    }
};

BoundReport check_bounds(const FixedPointData& data, const SkeletonAnalysis& analysis);

} // namespace hamloc
