#include "hamloc/corpus.hpp"

#include <random>
#include <set>
#include <tuple>

namespace hamloc {

FixedPointData gen_standard_cpn(const std::vector<std::int64_t>& m, bool with_moments) {
    if (m.size() < 2) throw DegenerateAction("need at least two exponents (n >= 1)");
    if (std::set<std::int64_t>(m.begin(), m.end()).size() != m.size()) {
        throw DegenerateAction("exponents must be pairwise distinct for the fixed points to be isolated");
    }
    std::vector<FixedPoint> pts;
    for (std::size_t j = 0; j < m.size(); ++j) {
        FixedPoint p;
        p.id = "P" + std::to_string(j);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != j) p.weights.push_back(m[i] - m[j]);
        }
        if (with_moments) p.moment = BigRational(static_cast<long>(m[j]));
        pts.push_back(std::move(p));
    }
    return FixedPointData::make(static_cast<int>(m.size()) - 1, std::move(pts), with_moments);
}

FixedPointData gen_product(const FixedPointData& first, const FixedPointData& second) {
    if (first.n < 1 || second.n < 1) throw std::invalid_argument("product factors need n >= 1");
    std::vector<FixedPoint> pts;
    for (const auto& a : first.points) {
        for (const auto& b : second.points) {
            FixedPoint p;
            p.id = a.id + "*" + b.id;
            p.weights = a.weights;
            p.weights.insert(p.weights.end(), b.weights.begin(), b.weights.end());
            if (a.moment && b.moment) p.moment = *a.moment + *b.moment;
            pts.push_back(std::move(p));
        }
    }
    return FixedPointData::make(first.n + second.n, std::move(pts),
                                first.synthetic_moments || second.synthetic_moments);
}

std::string to_string(MutationKind kind) {
    switch (kind) {
    case MutationKind::FlipWeightSign: return "flip-sign";
    case MutationKind::PerturbWeight: return "perturb";
    case MutationKind::SwapWeightsBetweenPoints: return "swap";
    case MutationKind::DropFixedPoint: return "drop";
    }
    return "?";
}

MutationKind parse_mutation_kind(const std::string& name) {
    for (auto k : {MutationKind::FlipWeightSign, MutationKind::PerturbWeight, MutationKind::SwapWeightsBetweenPoints,
                   MutationKind::DropFixedPoint}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown mutation kind '" + name + "' (flip-sign, perturb, swap, drop)");
}

namespace {

using Site = std::pair<std::size_t, std::size_t>;  // (point, weight slot)

template <typename T>
const T& pick(const std::vector<T>& sites, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dist(0, sites.size() - 1);
    return sites[dist(rng)];
}

} // namespace

FixedPointData mutate(const FixedPointData& data, const Mutation& mutation, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FixedPointData out = data;

    std::vector<Site> all;
    for (std::size_t i = 0; i < data.points.size(); ++i) {
        for (std::size_t k = 0; k < data.points[i].weights.size(); ++k) all.emplace_back(i, k);
    }

    switch (mutation.kind) {
    case MutationKind::FlipWeightSign: {
        if (all.empty()) throw std::invalid_argument("no weight to flip");
        auto [i, k] = pick(all, rng);
        out.points[i].weights[k] = -out.points[i].weights[k];
        break;
    }
    case MutationKind::PerturbWeight: {
        if (mutation.delta == 0) throw std::invalid_argument("perturbation delta must be nonzero");
        std::vector<Site> ok;
        for (auto s : all) {
            if (data.points[s.first].weights[s.second] + mutation.delta != 0) ok.push_back(s);
        }
        if (ok.empty()) throw std::invalid_argument("every weight would become zero");
        auto [i, k] = pick(ok, rng);
        out.points[i].weights[k] += mutation.delta;
        break;
    }
    case MutationKind::SwapWeightsBetweenPoints: {
        std::vector<std::pair<Site, Site>> pairs;
        for (std::size_t a = 0; a < all.size(); ++a) {
            for (std::size_t b = a + 1; b < all.size(); ++b) {
                if (all[a].first == all[b].first) continue;
                const Weight x = data.points[all[a].first].weights[all[a].second];
                const Weight y = data.points[all[b].first].weights[all[b].second];
                if (x != y && (x > 0) == (y > 0)) pairs.emplace_back(all[a], all[b]);
            }
        }
        if (pairs.empty()) throw std::invalid_argument("no two points share a sign with distinct weights");
        auto [s, t] = pick(pairs, rng);
        std::swap(out.points[s.first].weights[s.second], out.points[t.first].weights[t.second]);
        break;
    }
    case MutationKind::DropFixedPoint: {
        if (data.points.empty()) throw std::invalid_argument("no fixed point to drop");
        std::uniform_int_distribution<std::size_t> dist(0, data.points.size() - 1);
        out.points.erase(out.points.begin() + static_cast<std::ptrdiff_t>(dist(rng)));
        break;
    }
    }
    return out;
}

} // namespace hamloc
