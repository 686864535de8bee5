#pragma once

// Exact integer/rational arithmetic, elementary symmetric polynomials and
// integer Laurent polynomials.
//
// Integers and rationals are GMP values; mpq_class keeps itself in lowest
// terms with a positive denominator after every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamloc {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

bool is_integer(const BigRational& q);

/// k-th elementary symmetric polynomial of `values`. e_0 = 1.
BigInt elem_sym(std::size_t k, std::span<const BigInt> values);
BigInt elem_sym(std::size_t k, std::span<const std::int64_t> values);

/// All of e_0 .. e_len in one pass.
std::vector<BigInt> elem_sym_all(std::span<const std::int64_t> values);

/// Finitely supported integer Laurent polynomial in one variable t.
/// Zero coefficients are never stored, so equality is structural.
class LaurentPoly {
public:
    using Exponent = std::int64_t;

    LaurentPoly() = default;
    static LaurentPoly constant(const BigInt& c);
    static LaurentPoly monomial(Exponent e, const BigInt& c);
    /// 1 - t^p
    static LaurentPoly one_minus_power(Exponent p);

    const std::map<Exponent, BigInt>& terms() const { return terms_; }
    BigInt coeff(Exponent e) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_constant(const BigInt& c) const;
    Exponent min_exponent() const;
    Exponent max_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// e.g. "1 + t - 2*t^-3", terms in ascending exponent order; "0" when empty.
    std::string to_string() const;

private:
    void add_term(Exponent e, const BigInt& c);

    std::map<Exponent, BigInt> terms_;
};

/// prod (1 - t^p) over `exps`. Throws DomainError on a zero exponent.
LaurentPoly product_one_minus(std::span<const std::int64_t> exps);

/// The exact quotient prod(1 - t^p_i) / prod(1 - t^q_j) when it lies in
/// Z[t, 1/t]; std::nullopt when it does not. Throws DomainError when any
/// exponent is zero.
std::optional<LaurentPoly> laurent_ratio(std::span<const std::int64_t> num_exps,
                                         std::span<const std::int64_t> den_exps);

} // namespace hamloc
