#pragma once

// Test-only reference computations. Nothing here calls into the library's
// evaluation paths; they exist to produce expected values independently.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

/// e_k by summing the products over all k-subsets.
inline mpz_class elem_sym_subsets(std::size_t k, const std::vector<std::int64_t>& v) {
    mpz_class total = 0;
    const std::size_t n = v.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
        mpz_class prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) prod *= static_cast<long>(v[i]);
        }
        total += prod;
    }
    return total;
}

inline mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

/// Chern number \int prod c_{k_j} of CP^a x CP^b from the total Chern class
/// (1+x)^(a+1) (1+y)^(b+1), with x^a y^b integrating to 1. b = 0 gives CP^a.
inline mpz_class product_chern_number(int a, int b, const std::vector<int>& indices) {
    // Polynomials in x, y truncated at x^a y^b; key (i, j) -> coefficient.
    using Poly = std::map<std::pair<int, int>, mpz_class>;
    auto c_k = [&](int k) {
        Poly p;
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            if (i > a || j > b) continue;
            p[{i, j}] = binomial(a + 1, i) * binomial(b + 1, j);
        }
        return p;
    };
    Poly acc;
    acc[{0, 0}] = 1;
    for (int k : indices) {
        Poly next;
        for (const auto& [e1, c1] : acc) {
            for (const auto& [e2, c2] : c_k(k)) {
                const int i = e1.first + e2.first, j = e1.second + e2.second;
                if (i > a || j > b) continue;
                next[{i, j}] += c1 * c2;
            }
        }
        acc = std::move(next);
    }
    auto it = acc.find({a, b});
    return it == acc.end() ? mpz_class(0) : it->second;
}

} // namespace oracle
