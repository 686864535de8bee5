#include "hamloc/skeleton.hpp"

#include "hamloc/localization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hamloc {

namespace {

struct ValueMatchings {
    Weight w = 0;
    std::vector<std::vector<SkeletonEdge>> matchings;
    bool truncated = false;
};

class ValueMatcher {
public:
    ValueMatcher(const FixedPointData& data, const std::vector<BigInt>& gamma, const EnumerationOptions& opts,
                 Weight w)
        : data_(data), gamma_(gamma), opts_(opts), w_(w) {
        for (std::size_t i = 0; i < data.points.size(); ++i) {
            for (auto x : data.points[i].weights) {
                if (x == w) sources_.push_back(i);
                if (x == -w) ++capacity_[i];
            }
        }
        for (const auto& [t, _] : capacity_) targets_.push_back(t);
        out_.w = w;
    }

    ValueMatchings run() {
        std::size_t total_targets = 0;
        for (const auto& [_, c] : capacity_) total_targets += c;
        if (total_targets != sources_.size()) return std::move(out_);
        chosen_.assign(sources_.size(), 0);
        current_.clear();
        search(0);
        return std::move(out_);
    }

private:
    bool admissible(std::size_t s, std::size_t t, BigInt& c1) const {
        if (s == t) return false;
        BigInt diff = gamma_[s] - gamma_[t];
        BigInt wb(static_cast<long>(w_));
        if (!mpz_divisible_p(diff.get_mpz_t(), wb.get_mpz_t())) return false;
        c1 = diff / wb;
        if (opts_.min_edge_c1 && c1 < *opts_.min_edge_c1) return false;
        if (opts_.use_moment_filter) {
            const auto& ms = data_.points[s].moment;
            const auto& mt = data_.points[t].moment;
            if (ms && mt && !(*mt > *ms)) return false;
        }
        return true;
    }

    // Returns false once the cap has been exceeded.
    bool search(std::size_t i) {
        if (i == sources_.size()) {
            if (out_.matchings.size() >= opts_.cap) {
                out_.truncated = true;
                return false;
            }
            out_.matchings.push_back(current_);
            return true;
        }
        const std::size_t s = sources_[i];
        // Repeated occurrences of w at one point are interchangeable, so
        // their targets are taken in nondecreasing order.
        const std::size_t first = (i > 0 && sources_[i - 1] == s) ? chosen_[i - 1] : 0;
        for (std::size_t k = first; k < targets_.size(); ++k) {
            const std::size_t t = targets_[k];
            if (capacity_[t] == 0) continue;
            BigInt c1;
            if (!admissible(s, t, c1)) continue;
            --capacity_[t];
            chosen_[i] = k;
            current_.push_back(SkeletonEdge{s, t, w_, c1});
            const bool go_on = search(i + 1);
            current_.pop_back();
            ++capacity_[t];
            if (!go_on) return false;
        }
        return true;
    }

    const FixedPointData& data_;
    const std::vector<BigInt>& gamma_;
    const EnumerationOptions& opts_;
    Weight w_;
    std::vector<std::size_t> sources_;
    std::map<std::size_t, std::size_t> capacity_;
    std::vector<std::size_t> targets_;
    std::vector<std::size_t> chosen_;
    std::vector<SkeletonEdge> current_;
    ValueMatchings out_;
};

} // namespace

SkeletonEnumeration enumerate_skeletons(const FixedPointData& data, const EnumerationOptions& options) {
    SkeletonEnumeration result;
    if (options.cap == 0) throw std::invalid_argument("skeleton cap must be positive");

    const auto pos = positive_weights(data);
    const auto neg = negated_negative_weights(data);
    if (pos != neg) return result;  // no weight-preserving bijection at all

    const auto gamma = gamma_values(data);
    std::vector<ValueMatchings> per_value;
    bool any_truncated = false;
    for (const auto& [w, _] : pos) {
        per_value.push_back(ValueMatcher(data, gamma, options, w).run());
        if (per_value.back().matchings.empty()) return result;
        any_truncated = any_truncated || per_value.back().truncated;
    }

    // Odometer over the per-value lists; the smallest weight is the most
    // significant digit.
    std::vector<std::size_t> digit(per_value.size(), 0);
    while (true) {
        if (result.skeletons.size() >= options.cap) {
            result.truncated = true;
            break;
        }
        ToricSkeleton sk;
        for (std::size_t v = 0; v < per_value.size(); ++v) {
            const auto& m = per_value[v].matchings[digit[v]];
            sk.edges.insert(sk.edges.end(), m.begin(), m.end());
        }
        result.skeletons.push_back(std::move(sk));

        bool advanced = false;
        for (std::size_t v = per_value.size(); v-- > 0;) {
            if (++digit[v] < per_value[v].matchings.size()) {
                advanced = true;
                break;
            }
            digit[v] = 0;
        }
        if (!advanced) break;
    }
    result.truncated = result.truncated || any_truncated;
    return result;
}

SkeletonEnumeration enumerate_skeletons(const FixedPointData& data, std::size_t cap, bool use_moment_filter) {
    EnumerationOptions opts;
    opts.cap = cap;
    opts.use_moment_filter = use_moment_filter;
    return enumerate_skeletons(data, opts);
}

std::optional<std::string> skeleton_structure_error(const FixedPointData& data, const ToricSkeleton& s) {
    const auto gamma = gamma_values(data);
    // Remaining unmatched occurrences, keyed by (point, weight).
    std::map<std::pair<std::size_t, Weight>, std::size_t> open;
    for (std::size_t i = 0; i < data.points.size(); ++i) {
        for (auto x : data.points[i].weights) ++open[{i, x}];
    }
    for (const auto& e : s.edges) {
        if (e.w <= 0) return "edge with non-positive weight " + std::to_string(e.w);
        if (e.source >= data.size() || e.target >= data.size()) return std::string("edge endpoint out of range");
        if (e.source == e.target) return "self-edge at '" + data.points[e.source].id + "'";
        for (auto key : {std::pair{e.source, e.w}, std::pair{e.target, -e.w}}) {
            auto it = open.find(key);
            if (it == open.end() || it->second == 0) {
                return "weight " + std::to_string(key.second) + " at '" + data.points[key.first].id +
                       "' is used more often than it occurs";
            }
            --it->second;
        }
        BigInt diff = gamma[e.source] - gamma[e.target];
        BigInt wb(static_cast<long>(e.w));
        if (!mpz_divisible_p(diff.get_mpz_t(), wb.get_mpz_t()) || diff / wb != e.c1) {
            return "edge " + data.points[e.source].id + " -> " + data.points[e.target].id +
                   " carries an inconsistent c1";
        }
    }
    for (const auto& [key, left] : open) {
        if (left != 0) {
            return "weight " + std::to_string(key.second) + " at '" + data.points[key.first].id +
                   "' is not covered by an edge";
        }
    }
    return std::nullopt;
}

SkeletonAnalysis analyze_skeleton(const FixedPointData& data, const ToricSkeleton& s) {
    if (auto err = skeleton_structure_error(data, s)) throw std::invalid_argument("invalid skeleton: " + *err);
    if (s.edges.empty()) throw std::invalid_argument("invalid skeleton: no edges");

    SkeletonAnalysis a;
    a.edge_count = s.edges.size();
    a.rho = s.edges.front().c1;
    a.c1_sum = 0;
    a.c1_gcd = 0;
    for (const auto& e : s.edges) {
        if (e.c1 < a.rho) a.rho = e.c1;
        a.c1_sum += e.c1;
        mpz_gcd(a.c1_gcd.get_mpz_t(), a.c1_gcd.get_mpz_t(), e.c1.get_mpz_t());
    }
    a.all_equal_rho = std::all_of(s.edges.begin(), s.edges.end(), [&](const SkeletonEdge& e) { return e.c1 == a.rho; });

    // Summing c1 over any weight-preserving pairing regroups the localization
    // sum of \int c1 c_{n-1} term by term, so this can only fail on a bug.
    const BigRational localized = abbv_integral(data, data.n == 1 ? ChernMonomial({1}) : ChernMonomial({1, data.n - 1}));
    if (BigRational(a.c1_sum) != localized) {
        throw std::logic_error("sum of sphere c1 values " + to_string(a.c1_sum) +
                               " differs from localized \\int c1 c_{n-1} = " + to_string(localized));
    }
    return a;
}

} // namespace hamloc
