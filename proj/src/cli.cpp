#include "hamloc/cli.hpp"

#include "hamloc/betti_chern.hpp"
#include "hamloc/corpus.hpp"
#include "hamloc/io.hpp"
#include "hamloc/localization.hpp"
#include "hamloc/rigidity.hpp"
#include "hamloc/selftest.hpp"
#include "hamloc/skeleton.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hamloc {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw ParseError("not an integer list: '" + text + "'");
        }
        if (used != item.size()) throw ParseError("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

void print_summary(std::ostream& out, const FixedPointData& data) {
    const auto prof = morse_profile(data);
    out << "dataset: n = " << data.n << " (dimension " << 2 * data.n << "), " << data.size() << " fixed points\n";
    out << "betti (b0, b2, ...): " << join_ints(prof.betti) << "   euler characteristic: " << prof.euler << "\n";
}

Json summary_json(const FixedPointData& data) {
    Json j;
    j["n"] = data.n;
    j["points"] = data.size();
    j["profile"] = to_json(morse_profile(data));
    return j;
}

void print_validation(std::ostream& out, const ValidationReport& r) {
    out << "weight symmetry W+ = -W-:           " << yes_no(r.hattori_ok) << "\n";
    out << "all weights nonzero:                " << yes_no(r.nonzero_ok) << "\n";
    out << "at least n+1 fixed points:          " << yes_no(r.min_count_ok) << "\n";
    out << "Poincare duality b_2k = b_2(n-k):   " << yes_no(r.poincare_ok) << "\n";
    out << "unimodal Betti numbers:             " << yes_no(r.unimodal) << "\n";
    out << "moment values consistent:           " << yes_no(r.moment_consistent) << "\n";
    for (const auto& m : r.messages) out << "  - " << m << "\n";
}

void print_edges(std::ostream& out, const FixedPointData& data, const ToricSkeleton& s) {
    for (const auto& e : s.edges) {
        out << "    " << data.points[e.source].id << " -> " << data.points[e.target].id << "  w = " << e.w
            << "  c1 = " << to_string(e.c1) << "\n";
    }
}

void print_analysis(std::ostream& out, const SkeletonAnalysis& a) {
    out << "    pseudo-index rho = " << to_string(a.rho) << ", c1 sum = " << to_string(a.c1_sum)
        << ", gcd of c1 values = " << to_string(a.c1_gcd) << " (divisibility certificate, not the index k0)"
        << ", all c1 equal rho: " << yes_no(a.all_equal_rho) << "\n";
}

void print_c(std::ostream& out, const CIntegerBreakdown& c) {
    out << "    C(rho, n, b) = " << to_string(c.value) << "; A_i =";
    for (const auto& x : c.coeffs_A) out << " " << to_string(x);
    out << "; M(rho, n) = " << to_string(c.m_value) << "; lambda(rho, n) = "
        << (c.lambda_index ? std::to_string(*c.lambda_index) : std::string("none")) << "\n";
}

void print_bounds(std::ostream& out, const BoundReport& r) {
    out << "    rho <= 2n: " << yes_no(r.bound_2n_ok) << "; unimodal: " << yes_no(r.unimodal_applicable)
        << "; rho <= n+1 (when unimodal): " << yes_no(r.bound_n_plus_1_ok) << "; C >= 0: " << yes_no(r.c_nonneg_ok)
        << "; C = 0 iff all c1 equal: " << yes_no(r.c_zero_iff_all_equal_ok) << "\n";
    if (r.c) print_c(out, *r.c);
}

void print_certificate(std::ostream& out, const FixedPointData& data, const RigidityCertificate& c) {
    out << "verdict: " << (c.passed ? "PASS" : "FAIL");
    if (!c.passed) out << " at stage " << to_string(c.failed_stage) << ": " << c.reason;
    out << "\n";
    if (c.passed && !c.hypotheses_in_scope) out << "note: outside theorem hypotheses (n > 5 and Betti not unimodal)\n";
    if (c.skeleton) {
        out << "admissible candidate #" << *c.skeleton_index << " with pseudo-index n+1:\n";
        print_edges(out, data, *c.skeleton);
        print_analysis(out, *c.analysis);
    }
    if (c.c) print_c(out, *c.c);
    if (!c.a.empty()) {
        out << "a =";
        for (const auto& x : c.a) out << " " << to_string(x);
        out << "   d = " << to_string(c.d) << "\n";
    }
    for (std::size_t i = 0; i < c.weight_match.size(); ++i) {
        out << "P" << i << " = '" << data.points[c.order[i]].id << "': weights match {a_i - a_j}: "
            << yes_no(c.weight_match[i]);
        if (i < c.laurent.size()) {
            out << "; Laurent quotient: " << (c.laurent[i] ? c.laurent[i]->to_string() : std::string("not divisible"));
        }
        out << "\n";
    }
    if (!c.tolman_coeffs.empty()) {
        out << "Tolman generator coefficients:";
        for (const auto& q : c.tolman_coeffs) out << " " << to_string(q);
        out << "   \\int c1^n = " << to_string(c.c1_top) << "   ring check: " << yes_no(c.generator_check_ok) << "\n";
    }
}

struct Options {
    std::string format = "text";
    std::string file;
    std::size_t cap = 1000;
    bool moment_filter = false;
    std::vector<std::string> monomials;
    std::string m_list;
    bool with_moments = false;
    std::string first, second;
    std::string kind;
    std::uint64_t seed = 0;
    std::int64_t delta = 1;
    std::string output;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const Options& o, std::ostream& out) {
    const auto data = load_dataset(o.file);
    const auto r = validate(data);
    if (o.format == "json") {
        Json j;
        j["dataset"] = summary_json(data);
        j["validation"] = to_json(r);
        emit(out, j);
    } else {
        print_summary(out, data);
        print_validation(out, r);
    }
    return r.all_ok() ? kExitOk : kExitFail;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const auto data = load_dataset(o.file);
    std::vector<ChernMonomial> monos;
    if (o.monomials.empty()) {
        monos.push_back(data.n == 1 ? ChernMonomial({1}) : ChernMonomial({1, data.n - 1}));
        for (auto m : {ChernMonomial::c1_power(data.n), ChernMonomial({data.n})}) {
            if (std::none_of(monos.begin(), monos.end(),
                             [&](const ChernMonomial& x) { return x.indices() == m.indices(); })) {
                monos.push_back(m);
            }
        }
    }
    for (const auto& text : o.monomials) {
        std::vector<int> idx;
        for (auto v : parse_int_list(text)) idx.push_back(static_cast<int>(v));
        monos.emplace_back(idx);
    }
    Json results = Json::array();
    if (o.format != "json") print_summary(out, data);
    for (const auto& m : monos) {
        const auto v = abbv_integral(data, m);
        if (o.format == "json") {
            Json j;
            j["monomial"] = m.to_string();
            j["degree"] = m.degree();
            j["value"] = to_string(v);
            results.push_back(std::move(j));
        } else {
            out << "\\int " << m.to_string() << " = " << to_string(v) << "\n";
        }
    }
    if (o.format == "json") {
        Json j;
        j["dataset"] = summary_json(data);
        j["integrals"] = std::move(results);
        emit(out, j);
    }
    return kExitOk;
}

int cmd_skeleton(const Options& o, std::ostream& out) {
    const auto data = load_dataset(o.file);
    const auto sks = enumerate_skeletons(data, o.cap, o.moment_filter);
    Json list = Json::array();
    if (o.format != "json") {
        print_summary(out, data);
        out << sks.skeletons.size() << " admissible candidate(s)" << (sks.truncated ? " (truncated at cap)" : "")
            << "; candidates satisfy necessary conditions only\n";
    }
    for (std::size_t k = 0; k < sks.skeletons.size(); ++k) {
        const auto a = analyze_skeleton(data, sks.skeletons[k]);
        if (o.format == "json") {
            Json j;
            j["index"] = k;
            j["edges"] = to_json(data, sks.skeletons[k]);
            j["analysis"] = to_json(a);
            list.push_back(std::move(j));
        } else {
            out << "admissible candidate #" << k << ":\n";
            print_edges(out, data, sks.skeletons[k]);
            print_analysis(out, a);
        }
    }
    if (o.format == "json") {
        Json j;
        j["dataset"] = summary_json(data);
        j["truncated"] = sks.truncated;
        j["admissible_candidates"] = std::move(list);
        emit(out, j);
    }
    return sks.skeletons.empty() ? kExitFail : kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const auto data = load_dataset(o.file);
    const auto sks = enumerate_skeletons(data, o.cap, o.moment_filter);
    bool all_ok = !sks.skeletons.empty();
    Json list = Json::array();
    if (o.format != "json") {
        print_summary(out, data);
        out << sks.skeletons.size() << " admissible candidate(s)" << (sks.truncated ? " (truncated at cap)" : "") << "\n";
    }
    for (std::size_t k = 0; k < sks.skeletons.size(); ++k) {
        const auto a = analyze_skeleton(data, sks.skeletons[k]);
        const auto b = check_bounds(data, a);
        all_ok = all_ok && b.all_ok();
        if (o.format == "json") {
            Json j;
            j["index"] = k;
            j["analysis"] = to_json(a);
            j["bounds"] = to_json(b);
            list.push_back(std::move(j));
        } else {
            out << "admissible candidate #" << k << ":\n";
            print_analysis(out, a);
            print_bounds(out, b);
        }
    }
    if (o.format == "json") {
        Json j;
        j["dataset"] = summary_json(data);
        j["truncated"] = sks.truncated;
        j["admissible_candidates"] = std::move(list);
        emit(out, j);
    }
    return all_ok ? kExitOk : kExitFail;
}

int cmd_rigidity(const Options& o, std::ostream& out) {
    const auto data = load_dataset(o.file);
    RigidityOptions ro;
    ro.skeleton_cap = o.cap;
    const auto cert = rigidity_verdict(data, ro);
    if (o.format == "json") {
        Json j;
        j["dataset"] = summary_json(data);
        j["certificate"] = to_json(cert, data);
        emit(out, j);
    } else {
        print_summary(out, data);
        print_certificate(out, data, cert);
    }
    return cert.passed ? kExitOk : kExitFail;
}

int write_dataset(const Options& o, const FixedPointData& data, std::ostream& out) {
    if (o.output.empty()) {
        out << serialize_dataset(data);
    } else {
        save_dataset(data, o.output);
    }
    return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
    const auto results = run_acceptance_suite();
    bool all = true;
    Json list = Json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (o.format == "json") {
            Json j;
            j["criterion"] = r.name;
            j["passed"] = r.passed;
            j["detail"] = r.detail;
            list.push_back(std::move(j));
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        }
    }
    if (o.format == "json") emit(out, list);
    return all ? kExitOk : kExitFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fixed-point data toolkit for Hamiltonian circle actions with isolated fixed points", "hamloc"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", o.cap, "Maximum number of skeleton candidates")->check(CLI::PositiveNumber);
    };

    auto* validate_cmd = app.add_subcommand("validate", "Structural checks on a dataset");
    validate_cmd->add_option("file", o.file, "Dataset file")->required();
    add_format(validate_cmd);

    auto* analyze_cmd = app.add_subcommand("analyze", "Chern numbers by localization");
    analyze_cmd->add_option("file", o.file, "Dataset file")->required();
    analyze_cmd->add_option("--monomial", o.monomials,
                            "Chern class indices, e.g. 1,1 for c1^2 (repeatable; default c1c_{n-1}, c1^n, c_n)");
    add_format(analyze_cmd);

    auto* skeleton_cmd = app.add_subcommand("skeleton", "Enumerate admissible toric 1-skeleton candidates");
    skeleton_cmd->add_option("file", o.file, "Dataset file")->required();
    add_cap(skeleton_cmd);
    skeleton_cmd->add_flag("--moment-filter", o.moment_filter, "Require edges to increase the moment value");
    add_format(skeleton_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "Pseudo-index bounds and C(rho, n, b) per candidate");
    bounds_cmd->add_option("file", o.file, "Dataset file")->required();
    add_cap(bounds_cmd);
    bounds_cmd->add_flag("--moment-filter", o.moment_filter, "Require edges to increase the moment value");
    add_format(bounds_cmd);

    auto* rigidity_cmd = app.add_subcommand("rigidity", "Certify or refute the standard CP^n weights");
    rigidity_cmd->add_option("file", o.file, "Dataset file")->required();
    add_cap(rigidity_cmd);
    add_format(rigidity_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "Write a dataset file");
    generate_cmd->require_subcommand(1);
    auto* gen_cpn = generate_cmd->add_subcommand("standard-cpn", "Standard action on CP^n");
    gen_cpn->add_option("--m", o.m_list, "Pairwise distinct exponents m_0,...,m_n")->required();
    gen_cpn->add_flag("--moments", o.with_moments, "Attach synthetic moment values m_j");
    gen_cpn->add_option("-o,--output", o.output, "Output file (default: standard output)");
    auto* gen_prod = generate_cmd->add_subcommand("product", "Diagonal action on a product");
    gen_prod->add_option("first", o.first, "First factor dataset")->required();
    gen_prod->add_option("second", o.second, "Second factor dataset")->required();
    gen_prod->add_option("-o,--output", o.output, "Output file (default: standard output)");
    auto* gen_mut = generate_cmd->add_subcommand("mutate", "Seeded corruption of a dataset");
    gen_mut->add_option("file", o.file, "Dataset file")->required();
    gen_mut->add_option("--kind", o.kind, "flip-sign, perturb, swap or drop")
        ->required()
        ->check(CLI::IsMember({"flip-sign", "perturb", "swap", "drop"}));
    gen_mut->add_option("--seed", o.seed, "Mutation seed")->required();
    gen_mut->add_option("--delta", o.delta, "Perturbation added to one weight (perturb only)");
    gen_mut->add_option("-o,--output", o.output, "Output file (default: standard output)");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance checks on built-in datasets");
    add_format(selftest_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitBadInput;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(o, out);
        if (analyze_cmd->parsed()) return cmd_analyze(o, out);
        if (skeleton_cmd->parsed()) return cmd_skeleton(o, out);
        if (bounds_cmd->parsed()) return cmd_bounds(o, out);
        if (rigidity_cmd->parsed()) return cmd_rigidity(o, out);
        if (selftest_cmd->parsed()) return cmd_selftest(o, out);
        if (gen_cpn->parsed()) return write_dataset(o, gen_standard_cpn(parse_int_list(o.m_list), o.with_moments), out);
        if (gen_prod->parsed()) return write_dataset(o, gen_product(load_dataset(o.first), load_dataset(o.second)), out);
        if (gen_mut->parsed()) {
            const Mutation mut{parse_mutation_kind(o.kind), o.delta};
            return write_dataset(o, mutate(load_dataset(o.file), mut, o.seed), out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const InvalidDataset& e) {
        err << "error: invalid dataset: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    err << app.help();
    return kExitBadInput;
}

} // namespace hamloc
