#include "hamloc/fixed_point.hpp"

#include <algorithm>
#include <set>

namespace hamloc {

FixedPointData FixedPointData::make(int n, std::vector<FixedPoint> points, bool synthetic_moments) {
    if (n < 1) throw InvalidDataset("half-dimension n must be at least 1, got " + std::to_string(n));
    std::set<std::string> ids;
    for (const auto& p : points) {
        if (p.id.empty()) throw InvalidDataset("fixed point with empty id");
        if (!ids.insert(p.id).second) throw InvalidDataset("duplicate fixed point id '" + p.id + "'");
        if (p.weights.size() != static_cast<std::size_t>(n)) {
            throw InvalidDataset("fixed point '" + p.id + "' has " + std::to_string(p.weights.size()) +
                                 " weights, expected " + std::to_string(n));
        }
        if (std::find(p.weights.begin(), p.weights.end(), 0) != p.weights.end()) {
            throw InvalidDataset("fixed point '" + p.id + "' has a zero weight");
        }
    }
    return FixedPointData{n, std::move(points), synthetic_moments};
}

std::optional<std::size_t> FixedPointData::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].id == id) return i;
    }
    return std::nullopt;
}

WeightMultiset positive_weights(const FixedPointData& data) {
    WeightMultiset m;
    for (const auto& p : data.points) {
        for (auto w : p.weights) {
            if (w > 0) ++m[w];
        }
    }
    return m;
}

WeightMultiset negated_negative_weights(const FixedPointData& data) {
    WeightMultiset m;
    for (const auto& p : data.points) {
        for (auto w : p.weights) {
            if (w < 0) ++m[-w];
        }
    }
    return m;
}

bool is_unimodal(const BettiVector& b) {
    if (b.empty()) return true;
    const std::size_t half = (b.size() - 1) / 2;  // floor(n/2)
    for (std::size_t k = 0; k < half; ++k) {
        if (b[k] > b[k + 1]) return false;
    }
    return true;
}

bool is_poincare_symmetric(const BettiVector& b) {
    return std::equal(b.begin(), b.end(), b.rbegin());
}

namespace {

bool shape_ok(const FixedPointData& data) {
    return std::all_of(data.points.begin(), data.points.end(), [&](const FixedPoint& p) {
        return p.weights.size() == static_cast<std::size_t>(data.n);
    });
}

int negative_count(const FixedPoint& p) {
    return static_cast<int>(std::count_if(p.weights.begin(), p.weights.end(), [](Weight w) { return w < 0; }));
}

} // namespace

MorseProfile morse_profile(const FixedPointData& data) {
    if (data.n < 1 || !shape_ok(data)) throw InvalidDataset("weight lists do not all have length n");
    MorseProfile prof;
    prof.betti.assign(static_cast<std::size_t>(data.n) + 1, 0);
    for (const auto& p : data.points) {
        int l = negative_count(p);
        prof.lambda.push_back(l);
        ++prof.betti[static_cast<std::size_t>(l)];
    }
    prof.euler = static_cast<std::int64_t>(data.points.size());
    prof.unimodal = is_unimodal(prof.betti);
    return prof;
}

PointInvariants point_invariants(const FixedPointData& data, std::size_t i) {
    if (i >= data.points.size()) {
        throw std::out_of_range("fixed point index " + std::to_string(i) + " out of range (" +
                                std::to_string(data.points.size()) + " points)");
    }
    PointInvariants inv;
    inv.gamma = 0;
    inv.lambda_minus = 1;
    for (auto w : data.points[i].weights) {
        inv.gamma += static_cast<long>(w);
        if (w < 0) {
            ++inv.lambda;
            inv.lambda_minus *= static_cast<long>(w);
        }
    }
    return inv;
}

std::vector<BigInt> gamma_values(const FixedPointData& data) {
    std::vector<BigInt> out;
    out.reserve(data.points.size());
    for (std::size_t i = 0; i < data.points.size(); ++i) out.push_back(point_invariants(data, i).gamma);
    return out;
}

namespace {

bool check_moments(const FixedPointData& data, const MorseProfile& prof, std::vector<std::string>& messages) {
    const auto with_moment = std::count_if(data.points.begin(), data.points.end(),
                                           [](const FixedPoint& p) { return p.moment.has_value(); });
    if (with_moment == 0) return true;
    if (static_cast<std::size_t>(with_moment) != data.points.size()) {
        messages.push_back("moment values are given for some fixed points but not all");
        return false;
    }
    auto extreme_ok = [&](int lambda, bool want_min) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < prof.lambda.size(); ++i) {
            if (prof.lambda[i] == lambda) idx.push_back(i);
        }
        if (idx.size() != 1) {
            messages.push_back("expected exactly one fixed point with " + std::to_string(lambda) +
                               " negative weights, found " + std::to_string(idx.size()));
            return false;
        }
        const auto& m = *data.points[idx[0]].moment;
        for (std::size_t i = 0; i < data.points.size(); ++i) {
            if (i == idx[0]) continue;
            const auto& other = *data.points[i].moment;
            if (want_min ? !(m < other) : !(m > other)) {
                messages.push_back("fixed point '" + data.points[idx[0]].id + "' is not the unique " +
                                   (want_min ? "minimum" : "maximum") + " of the moment map");
                return false;
            }
        }
        return true;
    };
    const bool lo = extreme_ok(0, true);
    const bool hi = extreme_ok(data.n, false);
    return lo && hi;
}

} // namespace

ValidationReport validate(const FixedPointData& data) {
    ValidationReport rep;
    if (data.n < 1 || !shape_ok(data)) {
        rep.messages.push_back("every fixed point must carry exactly n weights (n >= 1)");
        return rep;
    }

    rep.nonzero_ok = true;
    for (const auto& p : data.points) {
        if (std::find(p.weights.begin(), p.weights.end(), 0) != p.weights.end()) {
            rep.nonzero_ok = false;
            rep.messages.push_back("fixed point '" + p.id + "' has a zero weight");
        }
    }

    const auto pos = positive_weights(data);
    const auto neg = negated_negative_weights(data);
    rep.hattori_ok = pos == neg;
    if (!rep.hattori_ok) {
        std::set<Weight> keys;
        for (const auto& [w, _] : pos) keys.insert(w);
        for (const auto& [w, _] : neg) keys.insert(w);
        for (auto w : keys) {
            auto cp = pos.count(w) ? pos.at(w) : 0;
            auto cn = neg.count(w) ? neg.at(w) : 0;
            if (cp != cn) {
                rep.messages.push_back("weight " + std::to_string(w) + " occurs " + std::to_string(cp) +
                                       " times but " + std::to_string(-w) + " occurs " + std::to_string(cn) +
                                       " times");
            }
        }
    }

    rep.min_count_ok = data.points.size() >= static_cast<std::size_t>(data.n) + 1;
    if (!rep.min_count_ok) {
        rep.messages.push_back("only " + std::to_string(data.points.size()) + " fixed points, need at least " +
                               std::to_string(data.n + 1));
    }

    const auto prof = morse_profile(data);
    rep.poincare_ok = is_poincare_symmetric(prof.betti);
    if (!rep.poincare_ok) rep.messages.push_back("Betti numbers violate b_2k = b_2(n-k)");
    rep.unimodal = prof.unimodal;
    rep.moment_consistent = check_moments(data, prof, rep.messages);
    return rep;
}

} // namespace hamloc
