// Command-line front end: constructs codes (closed-form family, scaled
// simplex, Sidon/coset slicing, or the full Tverberg pipeline), verifies
// them with the exact checker and the brute-force oracles, relabels them
// between the three state spaces, and regenerates the published examples.
//
// Exit status: 0 all checks pass, 1 verification failure, 2 usage/config
// error, 3 construction failure.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplexcodes/examples.hpp"
#include "simplexcodes/oracle.hpp"
#include "simplexcodes/serialization.hpp"

using namespace simplexcodes;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstructFail = 3;

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty()) {
        std::cout << content;
    } else {
        write_atomic(output_path, content);
    }
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

OperatorMatrix named_gate(const std::string& name) {
    OperatorMatrix m = OperatorMatrix::Zero(2, 2);
    if (name == "X") {
        m(0, 1) = 1;
        m(1, 0) = 1;
    } else if (name == "T") {
        m(0, 0) = 1;
        m(1, 1) = std::polar(1.0, M_PI / 4);
    } else if (name == "Z") {
        m(0, 0) = 1;
        m(1, 1) = -1;
    } else if (name == "I") {
        m = OperatorMatrix::Identity(2, 2);
    } else {
        throw std::invalid_argument("unknown gate '" + name + "' (supported: I, X, Z, T)");
    }
    return m;
}

struct ConstructArgs {
    std::string kind;
    int g = 0, m = 0, delta = 0, eps = -1;
    int big_k = 2, t = 2;
    int p = 2, q = 0, n = 0;
    bool scaled = false;
    std::string l1_path;
    std::string strategy = "auto";
    std::string hint_path;
    std::string space = "pi";
    std::string output;
};

WitnessStrategy parse_strategy(const std::string& s) {
    if (s == "auto") return WitnessStrategy::Auto;
    if (s == "orbit") return WitnessStrategy::Orbit;
    if (s == "exhaustive") return WitnessStrategy::Exhaustive;
    if (s == "hinted") return WitnessStrategy::Hinted;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

int cmd_construct(const ConstructArgs& args) {
    if (args.kind == "family") {
        SimplexCode code = construction_gmde(args.g, args.m, args.delta, args.eps);
        emit(args.output, to_json(code));
        return kExitOk;
    }
    if (args.kind == "scaled") {
        L1Code code = scaled_simplex_code(args.big_k, args.t);
        emit(args.output, to_json(code));
        return kExitOk;
    }
    if (args.kind == "sidon") {
        if (args.q <= 0 || args.n < 0)
            throw std::invalid_argument("construct sidon: --q and --N are required");
        SidonSet sidon = bose_chowla(args.p, args.t);
        L1Code code = coset_codes(sidon, args.q, args.n);
        emit(args.output, to_json(code));
        return kExitOk;
    }
    if (args.kind == "tverberg") {
        L1Code seed;
        std::string origin;
        if (args.scaled) {
            seed = scaled_simplex_code(args.big_k, args.t);
            origin = "scaled(K=" + std::to_string(args.big_k) + ",t=" + std::to_string(args.t) + ")";
        } else if (!args.l1_path.empty()) {
            seed = l1code_from_json(read_file(args.l1_path));
            origin = "l1:" + args.l1_path;
        } else {
            throw std::invalid_argument("construct tverberg: need --scaled or --l1 FILE");
        }
        const PointCloud cloud = kl_point_cloud(seed, args.t);
        std::optional<Partition> hint;
        if (!args.hint_path.empty()) {
            const TverbergWitness hint_witness = witness_from_json(read_file(args.hint_path));
            Partition partition;
            std::map<SimplexPoint, int> index;
            for (size_t i = 0; i < cloud.labels.size(); ++i) index[cloud.labels[i]] = static_cast<int>(i);
            for (const auto& block : hint_witness.blocks) {
                std::vector<int> ids;
                for (const SimplexPoint& p : block) {
                    auto it = index.find(p);
                    if (it == index.end())
                        throw std::invalid_argument("hint contains a point outside the l1 code");
                    ids.push_back(it->second);
                }
                partition.push_back(std::move(ids));
            }
            hint = std::move(partition);
        }
        const WitnessStrategy strategy =
            hint && args.strategy == "auto" ? WitnessStrategy::Hinted : parse_strategy(args.strategy);
        const TverbergWitness witness = find_witness(cloud, args.big_k, strategy, hint);
        SimplexCode code = assemble_from_witness(witness, cloud, space_tag_from_string(args.space));
        code.provenance = origin + " | " + code.provenance + " | check_kl(exact,t=" +
                          std::to_string(args.t) + "):pass";
        emit(args.output, to_json(code));
        return kExitOk;
    }
    throw std::invalid_argument("unknown construct kind '" + args.kind + "'");
}

struct VerifyArgs {
    std::string code_path;
    std::string checks = "kl";
    int t = -1;
    std::string mode = "exact";
    double tolerance = 1e-9;
    std::string gammas = "0.01,0.1,0.3";
    std::string gates = "I";
    uint64_t seed = 20240901;
    std::string output;
};

int cmd_verify(const VerifyArgs& args) {
    const SimplexCode code = code_from_json(read_file(args.code_path));
    const int t = args.t >= 0 ? args.t : (code.distance ? *code.distance - 1 : 0);
    std::vector<double> gammas;
    for (const std::string& g : split_csv(args.gammas)) gammas.push_back(std::stod(g));

    json report;
    report["code"] = args.code_path;
    report["t"] = t;
    bool all_passed = true;
    json checks = json::object();

    for (const std::string& check : split_csv(args.checks)) {
        if (check == "kl") {
            const KLMode mode = args.mode == "float" ? KLMode::Float : KLMode::Exact;
            const KLReport kl = check_kl(code, t, mode, args.tolerance);
            checks["kl"] = json::parse(to_json(kl));
            all_passed = all_passed && kl.passed();
        } else if (check == "oracle-deletion") {
            if (code.space != SpaceTag::PI)
                throw std::invalid_argument("oracle-deletion expects a pi-tagged code");
            double worst = 0.0;
            for (int r = 1; r <= t; ++r)
                for (const SimplexPoint& e : enumerate_simplex(code.q, r))
                    for (int i = 0; i < code.K; ++i)
                        for (const auto& [n, amp] : code.logical(i))
                            worst = std::max(worst, deletion_oracle_check(n, e));
            const bool ok = worst <= 1e-12;
            checks["oracle-deletion"] = {{"passed", ok}, {"worst_residual", worst}, {"tolerance", 1e-12}};
            all_passed = all_passed && ok;
        } else if (check == "oracle-ad") {
            const GramVerdict verdict = ad_kl_gram(code, t, gammas, args.tolerance);
            checks["oracle-ad"] = {{"passed", verdict.passed},
                                   {"worst_orthogonality", verdict.worst_orthogonality},
                                   {"worst_deformation", verdict.worst_deformation},
                                   {"tolerance", verdict.tolerance},
                                   {"gammas", gammas}};
            all_passed = all_passed && verdict.passed;
        } else if (check == "oracle-spin") {
            const bool ok = spin_kl_check(code, t, args.tolerance);
            checks["oracle-spin"] = {{"passed", ok}, {"tolerance", args.tolerance}};
            all_passed = all_passed && ok;
        } else if (check == "fidelity") {
            const FidelityFit fit = fidelity_series(code, t, {1e-3, 2e-3, 4e-3}, args.seed);
            const double rel = std::abs(fit.fitted_leading_coefficient -
                                        fit.expected_leading_coefficient) /
                               fit.expected_leading_coefficient;
            const bool ok = rel <= 0.01;
            checks["fidelity"] = {{"passed", ok},
                                  {"fitted", fit.fitted_leading_coefficient},
                                  {"expected", fit.expected_leading_coefficient},
                                  {"relative_error", rel},
                                  {"state_dependence", fit.state_dependence},
                                  {"gammas", fit.gammas}};
            all_passed = all_passed && ok;
        } else if (check == "covariance") {
            json per_gate = json::object();
            bool ok = true;
            for (const std::string& gate : split_csv(args.gates)) {
                const CovarianceResult r = covariance_check(code, named_gate(gate), args.tolerance);
                const double defect = unitarity_defect(r.logical);
                const bool gate_ok = r.invariant && defect <= args.tolerance;
                per_gate[gate] = {{"invariant", r.invariant},
                                  {"invariance_residual", r.invariance_residual},
                                  {"logical_unitarity_defect", defect}};
                ok = ok && gate_ok;
            }
            checks["covariance"] = {{"passed", ok}, {"gates", per_gate}, {"tolerance", args.tolerance}};
            all_passed = all_passed && ok;
        } else {
            throw std::invalid_argument("unknown check '" + check + "'");
        }
    }
    report["checks"] = checks;
    report["passed"] = all_passed;
    emit(args.output, report.dump(2) + "\n");
    return all_passed ? kExitOk : kExitVerifyFail;
}

int cmd_map(const std::string& code_path, const std::string& to, const std::string& output) {
    const SimplexCode code = code_from_json(read_file(code_path));
    const SimplexCode mapped = map_space(code, space_tag_from_string(to));
    if (code.distance && !mapped.distance)
        std::cerr << "warning: declared distance cleared (spin-source relabeling at q="
                  << code.q << " is not distance-preserving)\n";
    emit(output, to_json(mapped));
    return kExitOk;
}

int cmd_examples(const std::string& name, bool all) {
    const auto results = run_examples(all || name.empty() ? "all" : name);
    size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool any_failed = false;
    for (const auto& r : results) {
        const char* status = r.status == ExampleStatus::Pass      ? "PASS"
                             : r.status == ExampleStatus::Skipped ? "SKIP"
                                                                  : "FAIL";
        any_failed = any_failed || r.status == ExampleStatus::Fail;
        std::cout << status << "  " << r.name << std::string(width - r.name.size() + 2, ' ')
                  << r.detail << "\n";
    }
    return any_failed ? kExitVerifyFail : kExitOk;
}

int cmd_simplex(int q, int n, bool count_only, const std::string& output) {
    const auto points = enumerate_simplex(q, n);
    json j;
    j["q"] = q;
    j["N"] = n;
    j["count"] = points.size();
    if (!count_only) {
        json arr = json::array();
        for (const SimplexPoint& p : points) arr.push_back(p.coords);
        j["points"] = arr;
    }
    emit(output, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of quantum codes on the discrete simplex"};
    app.require_subcommand(1);

    // construct
    ConstructArgs cargs;
    CLI::App* construct = app.add_subcommand("construct", "Build a code and write it as JSON");
    construct->require_subcommand(1);
    CLI::App* family = construct->add_subcommand("family", "Two-mode (g,m,delta,eps) family");
    family->add_option("--g", cargs.g)->required();
    family->add_option("--m", cargs.m)->required();
    family->add_option("--delta", cargs.delta)->required();
    family->add_option("--eps", cargs.eps)->required()->check(CLI::IsMember({-1, 1}));
    CLI::App* scaled = construct->add_subcommand("scaled", "Scaled-simplex l1 code");
    scaled->add_option("--K", cargs.big_k)->required();
    scaled->add_option("--t", cargs.t)->required();
    CLI::App* sidon = construct->add_subcommand("sidon", "Largest Sidon coset code in S_{q,N}");
    sidon->add_option("--p", cargs.p)->required();
    sidon->add_option("--t", cargs.t)->required();
    sidon->add_option("--q", cargs.q)->required();
    sidon->add_option("--N", cargs.n)->required();
    CLI::App* tverberg = construct->add_subcommand("tverberg", "Full l1 -> witness -> code pipeline");
    tverberg->add_option("--K", cargs.big_k)->required();
    tverberg->add_option("--t", cargs.t)->required();
    tverberg->add_flag("--scaled", cargs.scaled, "Seed with the scaled-simplex code for (K,t)");
    tverberg->add_option("--l1", cargs.l1_path, "Seed l1 code JSON file");
    tverberg->add_option("--strategy", cargs.strategy)->check(CLI::IsMember({"auto", "orbit", "exhaustive", "hinted"}));
    tverberg->add_option("--hint", cargs.hint_path, "Witness JSON whose blocks seed the partition");
    tverberg->add_option("--space", cargs.space)->check(CLI::IsMember({"pi", "fock", "spin"}));
    for (CLI::App* sub : {family, scaled, sidon, tverberg})
        sub->add_option("--output", cargs.output, "Output path (default: stdout)");

    // verify
    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "Run checks against a code file");
    verify->add_option("code", vargs.code_path)->required();
    verify->add_option("--checks", vargs.checks,
                       "Comma list of kl,oracle-deletion,oracle-ad,oracle-spin,fidelity,covariance");
    verify->add_option("--t", vargs.t, "Errors to verify against (default: declared distance - 1)");
    verify->add_option("--mode", vargs.mode)->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--tolerance", vargs.tolerance);
    verify->add_option("--gammas", vargs.gammas, "Damping rates for oracle-ad");
    verify->add_option("--gates", vargs.gates, "Gates for covariance (I,X,Z,T)");
    verify->add_option("--seed", vargs.seed);
    verify->add_option("--output", vargs.output);

    // map
    std::string map_code, map_to, map_output;
    CLI::App* map_cmd = app.add_subcommand("map", "Relabel a code into another space");
    map_cmd->add_option("code", map_code)->required();
    map_cmd->add_option("--to", map_to)->required()->check(CLI::IsMember({"pi", "fock", "spin"}));
    map_cmd->add_option("--output", map_output);

    // examples
    std::string example_name;
    bool examples_all = false;
    CLI::App* examples = app.add_subcommand("examples", "Regenerate the published examples");
    examples->add_option("name", example_name);
    examples->add_flag("--all", examples_all);

    // simplex
    int sq = 0, sn = 0;
    bool count_only = false;
    std::string simplex_output;
    CLI::App* simplex = app.add_subcommand("simplex", "Enumerate S_{q,N} (debug)");
    simplex->add_option("--q", sq)->required();
    simplex->add_option("--N", sn)->required();
    simplex->add_flag("--count-only", count_only);
    simplex->add_option("--output", simplex_output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            for (CLI::App* sub : {family, scaled, sidon, tverberg})
                if (sub->parsed()) cargs.kind = sub->get_name();
            try {
                return cmd_construct(cargs);
            } catch (const NoWitnessError& e) {
                std::cerr << "construction failed: " << e.what() << "\n";
                return kExitConstructFail;
            } catch (const std::logic_error& e) {
                std::cerr << "construction failed: " << e.what() << "\n";
                return kExitConstructFail;
            }
        }
        if (verify->parsed()) return cmd_verify(vargs);
        if (map_cmd->parsed()) return cmd_map(map_code, map_to, map_output);
        if (examples->parsed()) return cmd_examples(example_name, examples_all);
        if (simplex->parsed()) return cmd_simplex(sq, sn, count_only, simplex_output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
