#include "hamloc/betti_chern.hpp"

#include <numeric>
#include <stdexcept>

namespace hamloc {

namespace {

void require_shape(int n, const BettiVector& b) {
    if (n < 1) throw DomainError("n must be positive");
    if (b.size() != static_cast<std::size_t>(n) + 1) {
        throw DomainError("Betti vector has " + std::to_string(b.size()) + " entries, expected " +
                          std::to_string(n + 1));
    }
    for (auto x : b) {
        if (x < 0) throw DomainError("negative Betti number");
    }
}

// b_d for the real degree d (d even).
BigInt betti_at_degree(const BettiVector& b, int degree) {
    return BigInt(static_cast<long>(b[static_cast<std::size_t>(degree / 2)]));
}

} // namespace

BigInt chern_number_from_betti(int n, const BettiVector& b) {
    require_shape(n, b);
    BigRational offset(BigInt(5 * n - 3 * n * n), BigInt(2));
    offset.canonicalize();
    BigRational total(0);
    for (int k = 0; k <= n; ++k) {
        BigRational coeff = BigRational(6 * k * (k - 1)) + offset;
        total += coeff * BigRational(static_cast<long>(b[static_cast<std::size_t>(k)]));
    }
    if (!is_integer(total)) throw DomainError("Chern number from Betti numbers is not an integer: " + to_string(total));
    return total.get_num();
}

std::vector<BigInt> c_integer_coefficients(const BigInt& rho, int n) {
    if (n < 1) throw DomainError("n must be positive");
    const BigInt n_rho1 = BigInt(n) * (rho + 1);
    const int half = n / 2;
    std::vector<BigInt> a(static_cast<std::size_t>(half) + 1);
    if (n % 2 == 0) {
        for (int i = 0; i < half; ++i) {
            const int k = half - i;
            a[static_cast<std::size_t>(i)] = BigInt(12 * k * k) - n_rho1;
        }
        a[static_cast<std::size_t>(half)] = -(BigInt(half) * (rho + 1));
    } else {
        for (int i = 0; i < half; ++i) {
            const int k = half - i;
            a[static_cast<std::size_t>(i)] = BigInt(12 * k * (k + 1) + 3) - n_rho1;
        }
        a[static_cast<std::size_t>(half)] = -(n_rho1 - 3);
    }
    return a;
}

CIntegerBreakdown c_integer(const BigInt& rho, int n, const BettiVector& b) {
    require_shape(n, b);
    if (!is_poincare_symmetric(b)) throw DomainError("C(rho, n, b) needs Poincare-symmetric Betti numbers");

    // Closed form, one branch per parity, Betti numbers indexed by degree.
    const BigInt n_rho1 = BigInt(n) * (rho + 1);
    BigInt value(0);
    if (n % 2 == 0) {
        for (int k = 1; k <= n / 2; ++k) value += (BigInt(12 * k * k) - n_rho1) * betti_at_degree(b, n - 2 * k);
        value -= BigInt(n / 2) * (rho + 1) * betti_at_degree(b, n);
    } else {
        for (int k = 1; k <= (n - 1) / 2; ++k) {
            value += (BigInt(12 * k * (k + 1) + 3) - n_rho1) * betti_at_degree(b, n - 1 - 2 * k);
        }
        value -= (n_rho1 - 3) * betti_at_degree(b, n - 1);
    }

    CIntegerBreakdown out;
    out.value = value;
    out.coeffs_A = c_integer_coefficients(rho, n);
    out.m_value = 0;
    BigInt linear(0);
    for (std::size_t i = 0; i < out.coeffs_A.size(); ++i) {
        out.m_value += out.coeffs_A[i];
        linear += out.coeffs_A[i] * BigInt(static_cast<long>(b[i]));
        if (!out.lambda_index && out.coeffs_A[i] <= 0) out.lambda_index = static_cast<int>(i);
    }

    const BigInt chi = std::accumulate(b.begin(), b.end(), BigInt(0),
                                       [](const BigInt& acc, std::int64_t x) -> BigInt { return acc + BigInt(static_cast<long>(x)); });
    BigRational half_n(BigInt(n), BigInt(2));
    half_n.canonicalize();
    const BigRational from_sum = BigRational(chern_number_from_betti(n, b)) - BigRational(rho) * half_n * BigRational(chi);
    const BigInt m_closed = BigInt(n) * (n + 1) * (n + 1 - rho);
    if (linear != value || BigRational(value) != from_sum || out.m_value * 2 != m_closed) {
        throw std::logic_error("C(rho, n, b) forms disagree: closed form " + to_string(value) + ", sum A_i b_2i " +
                               to_string(linear) + ", c1 sum form " + to_string(from_sum));
    }
    return out;
}

BoundReport check_bounds(const FixedPointData& data, const SkeletonAnalysis& analysis) {
    const auto prof = morse_profile(data);
    BoundReport r;
    r.rho = analysis.rho;
    r.bound_2n_ok = analysis.rho <= 2 * data.n;
    r.unimodal_applicable = prof.unimodal;
    r.bound_n_plus_1_ok = !r.unimodal_applicable || analysis.rho <= data.n + 1;
    if (is_poincare_symmetric(prof.betti)) {
        r.c = c_integer(analysis.rho, data.n, prof.betti);
        r.c_nonneg_ok = r.c->value >= 0;
        r.c_zero_iff_all_equal_ok = (r.c->value == 0) == analysis.all_equal_rho;
    }
    return r;
}

} // namespace hamloc
