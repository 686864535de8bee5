#include "hamloc/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace hamloc {

namespace {

Json big(const BigInt& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Json rational(const BigRational& q) { return Json(to_string(q)); }

void require_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) throw ParseError("unknown field '" + key + "' in " + where);
    }
}

} // namespace

FixedPointData parse_dataset(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("dataset is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("dataset must be a JSON object");
    require_keys(doc, {"dimension", "fixed_points", "synthetic_moments"}, "dataset");

    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
        throw ParseError("'dimension' must be an integer");
    }
    const auto dim = doc["dimension"].get<std::int64_t>();
    if (dim < 2 || dim % 2 != 0 || dim > 2 * static_cast<std::int64_t>(std::numeric_limits<int>::max() / 2)) {
        throw ParseError("'dimension' must be a positive even integer (the real dimension 2n), got " +
                         std::to_string(dim));
    }
    bool synthetic = false;
    if (doc.contains("synthetic_moments")) {
        if (!doc["synthetic_moments"].is_boolean()) throw ParseError("'synthetic_moments' must be a boolean");
        synthetic = doc["synthetic_moments"].get<bool>();
    }

    if (!doc.contains("fixed_points") || !doc["fixed_points"].is_array()) {
        throw ParseError("'fixed_points' must be a list");
    }
    std::vector<FixedPoint> pts;
    for (const auto& rec : doc["fixed_points"]) {
        if (!rec.is_object()) throw ParseError("each fixed point must be an object");
        require_keys(rec, {"id", "weights", "moment"}, "fixed point");
        FixedPoint p;
        if (!rec.contains("id") || !rec["id"].is_string()) throw ParseError("fixed point 'id' must be a string");
        p.id = rec["id"].get<std::string>();
        if (!rec.contains("weights") || !rec["weights"].is_array()) {
            throw ParseError("fixed point '" + p.id + "' needs a 'weights' list");
        }
        for (const auto& w : rec["weights"]) {
            if (!w.is_number_integer()) throw ParseError("weights of '" + p.id + "' must be integers");
            if (w.is_number_unsigned() && w.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
                throw ParseError("weight of '" + p.id + "' does not fit in 64 bits");
            }
            p.weights.push_back(w.get<std::int64_t>());
        }
        if (rec.contains("moment")) {
            const auto& m = rec["moment"];
            try {
                if (m.is_number_integer()) {
                    p.moment = BigRational(static_cast<long>(m.get<std::int64_t>()));
                } else if (m.is_string()) {
                    p.moment = parse_rational(m.get<std::string>());
                } else {
                    throw ParseError("moment of '" + p.id + "' must be an integer or a \"p/q\" string");
                }
            } catch (const std::invalid_argument& e) {
                throw ParseError("moment of '" + p.id + "': " + e.what());
            }
        }
        pts.push_back(std::move(p));
    }
    try {
        return FixedPointData::make(static_cast<int>(dim / 2), std::move(pts), synthetic);
    } catch (const InvalidDataset& e) {
        throw ParseError(e.what());
    }
}

FixedPointData load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str());
}

std::string serialize_dataset(const FixedPointData& data) {
    Json doc;
    doc["dimension"] = 2 * data.n;
    Json pts = Json::array();
    for (const auto& p : data.points) {
        Json rec;
        rec["id"] = p.id;
        rec["weights"] = p.weights;
        if (p.moment) rec["moment"] = to_string(*p.moment);
        pts.push_back(std::move(rec));
    }
    doc["fixed_points"] = std::move(pts);
    if (data.synthetic_moments) doc["synthetic_moments"] = true;
    return doc.dump(2) + "\n";
}

void save_dataset(const FixedPointData& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_dataset(data);
}

Json to_json(const ValidationReport& r) {
    Json j;
    j["hattori_ok"] = r.hattori_ok;
    j["nonzero_ok"] = r.nonzero_ok;
    j["min_count_ok"] = r.min_count_ok;
    j["poincare_ok"] = r.poincare_ok;
    j["unimodal"] = r.unimodal;
    j["moment_consistent"] = r.moment_consistent;
    j["messages"] = r.messages;
    return j;
}

Json to_json(const MorseProfile& p) {
    Json j;
    j["lambda"] = p.lambda;
    j["betti"] = p.betti;
    j["euler"] = p.euler;
    j["unimodal"] = p.unimodal;
    return j;
}

Json to_json(const FixedPointData& data, const ToricSkeleton& s) {
    Json edges = Json::array();
    for (const auto& e : s.edges) {
        Json je;
        je["source"] = data.points[e.source].id;
        je["target"] = data.points[e.target].id;
        je["w"] = e.w;
        je["c1"] = big(e.c1);
        edges.push_back(std::move(je));
    }
    return edges;
}

Json to_json(const SkeletonAnalysis& a) {
    Json j;
    j["rho"] = big(a.rho);
    j["c1_sum"] = big(a.c1_sum);
    j["c1_gcd"] = big(a.c1_gcd);
    j["all_equal_rho"] = a.all_equal_rho;
    j["edge_count"] = a.edge_count;
    return j;
}

Json to_json(const CIntegerBreakdown& c) {
    Json j;
    j["value"] = big(c.value);
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs_A) coeffs.push_back(big(x));
    j["coeffs_A"] = std::move(coeffs);
    j["m_value"] = big(c.m_value);
    j["lambda_index"] = c.lambda_index ? Json(*c.lambda_index) : Json(nullptr);
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["rho"] = big(r.rho);
    j["bound_2n_ok"] = r.bound_2n_ok;
    j["unimodal_applicable"] = r.unimodal_applicable;
    j["bound_n_plus_1_ok"] = r.bound_n_plus_1_ok;
    j["c_nonneg_ok"] = r.c_nonneg_ok;
    j["c_zero_iff_all_equal_ok"] = r.c_zero_iff_all_equal_ok;
    j["c_integer"] = r.c ? to_json(*r.c) : Json(nullptr);
    return j;
}

Json to_json(const RigidityCertificate& c, const FixedPointData& data) {
    Json j;
    j["verdict"] = c.passed ? "PASS" : "FAIL";
    j["failed_stage"] = to_string(c.failed_stage);
    j["reason"] = c.reason;
    j["hypotheses_in_scope"] = c.hypotheses_in_scope;
    j["skeleton_index"] = c.skeleton_index ? Json(*c.skeleton_index) : Json(nullptr);
    j["skeleton"] = c.skeleton ? to_json(data, *c.skeleton) : Json(nullptr);
    j["skeleton_analysis"] = c.analysis ? to_json(*c.analysis) : Json(nullptr);
    j["c_integer"] = c.c ? to_json(*c.c) : Json(nullptr);
    j["all_c1_equal_ok"] = c.all_c1_equal_ok;
    Json order = Json::array();
    for (auto idx : c.order) order.push_back(data.points[idx].id);
    j["order"] = std::move(order);
    Json a = Json::array();
    for (const auto& x : c.a) a.push_back(big(x));
    j["a"] = std::move(a);
    j["d"] = c.a.empty() ? Json(nullptr) : big(c.d);
    j["divisibility_ok"] = c.divisibility_ok;
    j["gamma_order_ok"] = c.gamma_order_ok;
    j["weight_match"] = c.weight_match;
    Json laurent = Json::array();
    for (const auto& l : c.laurent) laurent.push_back(l ? Json(l->to_string()) : Json("not divisible"));
    j["laurent"] = std::move(laurent);
    j["laurent_ok"] = c.laurent_ok;
    Json coeffs = Json::array();
    for (const auto& q : c.tolman_coeffs) coeffs.push_back(rational(q));
    j["tolman_coeffs"] = std::move(coeffs);
    j["c1_top"] = c.tolman_coeffs.empty() ? Json(nullptr) : rational(c.c1_top);
    j["generator_check_ok"] = c.generator_check_ok;
    return j;
}

} // namespace hamloc
