#include "hamloc/localization.hpp"

#include <algorithm>
#include <numeric>

namespace hamloc {

ChernMonomial::ChernMonomial(std::vector<int> indices) : indices_(std::move(indices)) {
    for (int k : indices_) {
        if (k < 1) throw DomainError("Chern class index must be positive, got " + std::to_string(k));
    }
    std::sort(indices_.begin(), indices_.end());
}

ChernMonomial ChernMonomial::c1_power(int power) {
    if (power < 0) throw DomainError("negative power of c_1");
    return ChernMonomial(std::vector<int>(static_cast<std::size_t>(power), 1));
}

int ChernMonomial::degree() const { return std::accumulate(indices_.begin(), indices_.end(), 0); }

std::string ChernMonomial::to_string() const {
    if (indices_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += "*";
        out += "c" + std::to_string(indices_[i]);
    }
    return out;
}

BigRational abbv_integral(const FixedPointData& data, const ChernMonomial& mono) {
    for (int k : mono.indices()) {
        if (k > data.n) {
            throw DomainError("c" + std::to_string(k) + " does not exist in dimension 2n = " +
                              std::to_string(2 * data.n));
        }
    }
    if (mono.degree() > data.n) {
        throw DomainError("monomial " + mono.to_string() + " has degree " + std::to_string(mono.degree()) +
                          " above the top degree n = " + std::to_string(data.n));
    }

    BigRational total(0);
    for (const auto& p : data.points) {
        if (p.weights.size() != static_cast<std::size_t>(data.n)) {
            throw InvalidDataset("fixed point '" + p.id + "' does not have n weights");
        }
        const auto e = elem_sym_all(p.weights);
        const BigInt& euler = e.back();  // product of the weights
        if (euler == 0) throw InvalidDataset("fixed point '" + p.id + "' has a zero weight");
        BigInt restriction(1);
        for (int k : mono.indices()) restriction *= e[static_cast<std::size_t>(k)];
        BigRational term(restriction, euler);
        term.canonicalize();  // the two-argument constructor does not
        total += term;
    }
    return total;
}

BigInt chern_number_c1cn1(const FixedPointData& data) {
    const ChernMonomial mono = data.n == 1 ? ChernMonomial({1}) : ChernMonomial({1, data.n - 1});
    const BigRational value = abbv_integral(data, mono);
    if (!is_integer(value)) {
        throw InvalidDataset("\\int c1 c_{n-1} localizes to the non-integer " + to_string(value) +
                             "; the weights cannot come from a compact manifold");
    }
    return value.get_num();
}

} // namespace hamloc
