#pragma once

// Localization for isolated fixed points: an integral of a polynomial in
// the equivariant Chern classes is the sum over fixed points of its
// restriction divided by the product of the weights there. The restriction
// of c_k at a point is the k-th elementary symmetric polynomial of its
// weights, so every term is an exact rational.

#include "hamloc/exact.hpp"
#include "hamloc/fixed_point.hpp"

#include <string>
#include <vector>

namespace hamloc {

/// c_{k_1} * ... * c_{k_r}; the empty monomial is the unit class.
class ChernMonomial {
public:
    ChernMonomial() = default;
    explicit ChernMonomial(std::vector<int> indices);

    /// c_1^power
    static ChernMonomial c1_power(int power);

    const std::vector<int>& indices() const { return indices_; }
    int degree() const;
    std::string to_string() const;

private:
    std::vector<int> indices_;  // sorted
};

/// Sum over fixed points of prod_j e_{k_j}(weights) / prod(weights).
///
/// The result is 0 for degree < n and the Chern number for degree == n.
/// Throws DomainError if degree > n or an index is outside [1, n], and
/// InvalidDataset on a zero weight.
BigRational abbv_integral(const FixedPointData& data, const ChernMonomial& mono);

/// \int c_1 c_{n-1} (just \int c_1 when n == 1). Throws InvalidDataset when
/// the localization sum is not an integer.
BigInt chern_number_c1cn1(const FixedPointData& data);

} // namespace hamloc
