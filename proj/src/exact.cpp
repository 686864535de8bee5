#include "hamloc/exact.hpp"

#include <algorithm>
#include <cctype>

namespace hamloc {

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

} // namespace

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt elem_sym(std::size_t k, std::span<const BigInt> values) {
    if (k > values.size()) {
        throw DomainError("elem_sym: k = " + std::to_string(k) + " exceeds " +
                          std::to_string(values.size()) + " values");
    }
    // e[j] after processing a prefix; updated in place from the top down.
    std::vector<BigInt> e(k + 1, BigInt(0));
    e[0] = 1;
    for (const auto& v : values) {
        for (std::size_t j = k; j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e[k];
}

BigInt elem_sym(std::size_t k, std::span<const std::int64_t> values) {
    std::vector<BigInt> big;
    big.reserve(values.size());
    for (auto v : values) big.emplace_back(static_cast<long>(v));
    return elem_sym(k, big);
}

std::vector<BigInt> elem_sym_all(std::span<const std::int64_t> values) {
    std::vector<BigInt> e(values.size() + 1, BigInt(0));
    e[0] = 1;
    std::size_t seen = 0;
    for (auto v : values) {
        ++seen;
        BigInt bv(static_cast<long>(v));
        for (std::size_t j = seen; j >= 1; --j) e[j] += bv * e[j - 1];
    }
    return e;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(Exponent e, const BigInt& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::one_minus_power(Exponent p) {
    if (p == 0) throw DomainError("1 - t^0 is the zero polynomial");
    LaurentPoly r;
    r.add_term(0, 1);
    r.add_term(p, -1);
    return r;
}

void LaurentPoly::add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPoly::coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::is_constant(const BigInt& c) const {
    if (c == 0) return terms_.empty();
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == c;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw DomainError("min_exponent of the zero polynomial");
    return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw DomainError("max_exponent of the zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly product_one_minus(std::span<const std::int64_t> exps) {
    LaurentPoly r = LaurentPoly::constant(1);
    for (auto p : exps) r = r * LaurentPoly::one_minus_power(p);
    return r;
}

std::optional<LaurentPoly> laurent_ratio(std::span<const std::int64_t> num_exps,
                                         std::span<const std::int64_t> den_exps) {
    // Both products are checked for zero exponents before any division.
    LaurentPoly num = product_one_minus(num_exps);
    LaurentPoly den = product_one_minus(den_exps);

    // Multiply through by powers of t so both sides are ordinary polynomials,
    // then divide densely over Q.
    const auto num_shift = num.min_exponent();
    const auto den_shift = den.min_exponent();
    const auto num_deg = num.max_exponent() - num_shift;
    const auto den_deg = den.max_exponent() - den_shift;
    if (num_deg < den_deg) return std::nullopt;

    std::vector<BigRational> rem(static_cast<std::size_t>(num_deg) + 1, BigRational(0));
    for (const auto& [e, c] : num.terms()) rem[static_cast<std::size_t>(e - num_shift)] = c;
    std::vector<BigRational> divisor(static_cast<std::size_t>(den_deg) + 1, BigRational(0));
    for (const auto& [e, c] : den.terms()) divisor[static_cast<std::size_t>(e - den_shift)] = c;

    const BigRational lead = divisor.back();
    const auto quot_deg = num_deg - den_deg;
    std::vector<BigRational> quot(static_cast<std::size_t>(quot_deg) + 1, BigRational(0));
    for (auto i = quot_deg; i >= 0; --i) {
        const auto top = static_cast<std::size_t>(i + den_deg);
        if (rem[top] == 0) continue;
        BigRational q = rem[top] / lead;
        quot[static_cast<std::size_t>(i)] = q;
        for (std::size_t j = 0; j < divisor.size(); ++j) {
            if (divisor[j] != 0) rem[static_cast<std::size_t>(i) + j] -= q * divisor[j];
        }
    }
    for (const auto& r : rem) {
        if (r != 0) return std::nullopt;
    }

    LaurentPoly out;
    const auto offset = num_shift - den_shift;
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        if (!is_integer(quot[i])) return std::nullopt;
        out += LaurentPoly::monomial(static_cast<LaurentPoly::Exponent>(i) + offset, quot[i].get_num());
    }
    return out;
}

} // namespace hamloc
