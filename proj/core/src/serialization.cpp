#include "simplexcodes/serialization.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace simplexcodes {

namespace {

using nlohmann::json;  // object keys are kept sorted: canonical output

json point_to_json(const SimplexPoint& p) { return json(p.coords); }

SimplexPoint point_from_json(const json& j) {
    return SimplexPoint(j.get<std::vector<int>>());
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, true);
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    return j;
}

}  // namespace

std::string to_json(const L1Code& code) {
    json j;
    j["q"] = code.q;
    j["N"] = code.N;
    j["distance"] = code.certified_distance ? json(*code.certified_distance) : json(nullptr);
    json points = json::array();
    for (const SimplexPoint& p : code.points) points.push_back(point_to_json(p));
    j["points"] = points;
    return j.dump(2) + "\n";
}

L1Code l1code_from_json(const std::string& text) {
    const json j = parse(text);
    L1Code code;
    code.q = j.at("q").get<int>();
    code.N = j.at("N").get<int>();
    if (j.contains("distance") && !j.at("distance").is_null())
        code.certified_distance = j.at("distance").get<int>();
    for (const json& p : j.at("points")) code.points.push_back(point_from_json(p));
    code.canonicalize();
    return code;
}

std::string to_json(const TverbergWitness& witness) {
    json j;
    json blocks = json::array();
    for (const auto& block : witness.blocks) {
        json b = json::array();
        for (const SimplexPoint& p : block) b.push_back(point_to_json(p));
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    json weights = json::object();
    for (const auto& [point, weight] : witness.weights)
        weights[point.key()] = rational_to_string(weight);
    j["weights"] = weights;
    return j.dump(2) + "\n";
}

TverbergWitness witness_from_json(const std::string& text) {
    const json j = parse(text);
    TverbergWitness w;
    for (const json& b : j.at("blocks")) {
        std::vector<SimplexPoint> block;
        for (const json& p : b) block.push_back(point_from_json(p));
        w.blocks.push_back(std::move(block));
    }
    for (const auto& [key, value] : j.at("weights").items()) {
        std::vector<int> coords;
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) coords.push_back(std::stoi(part));
        w.weights[SimplexPoint(std::move(coords))] = parse_rational(value.get<std::string>());
    }
    return w;
}

std::string to_json(const SimplexCode& code) {
    json j;
    j["q"] = code.q;
    j["N"] = code.N;
    j["K"] = code.K;
    j["space"] = to_string(code.space);
    j["distance"] = code.distance ? json(*code.distance) : json(nullptr);
    json basis = json::array();
    for (int i = 0; i < code.K; ++i) {
        for (const auto& [point, amp] : code.logical(i)) {
            json entry;
            entry["point"] = point_to_json(point);
            entry["block"] = i;
            entry["sign"] = amp.sign;
            entry["amp_sq"] = rational_to_string(amp.square());
            basis.push_back(entry);
        }
    }
    j["basis"] = basis;
    j["provenance"] = code.provenance;
    return j.dump(2) + "\n";
}

SimplexCode code_from_json(const std::string& text) {
    const json j = parse(text);
    SimplexCode code;
    code.q = j.at("q").get<int>();
    code.N = j.at("N").get<int>();
    code.K = j.at("K").get<int>();
    code.space = space_tag_from_string(j.at("space").get<std::string>());
    if (j.contains("distance") && !j.at("distance").is_null())
        code.distance = j.at("distance").get<int>();
    code.provenance = j.value("provenance", "");
    code.amplitudes.resize(static_cast<size_t>(code.K));
    for (const json& entry : j.at("basis")) {
        const int block = entry.at("block").get<int>();
        if (block < 0 || block >= code.K) throw std::invalid_argument("code JSON: block out of range");
        const SimplexPoint point = point_from_json(entry.at("point"));
        if (point.q() != code.q || point.total() != code.N)
            throw std::invalid_argument("code JSON: point outside S_{q,N}");
        const int sign = entry.at("sign").get<int>();
        const Rational amp_sq = parse_rational(entry.at("amp_sq").get<std::string>());
        if (!code.amplitudes[static_cast<size_t>(block)]
                 .emplace(point, SqrtRational(sign, amp_sq))
                 .second)
            throw std::invalid_argument("code JSON: duplicate basis entry");
    }
    return code;
}

std::string to_json(const KLReport& report) {
    json j;
    j["t"] = report.t;
    j["mode"] = report.mode == KLMode::Exact ? "exact" : "float";
    j["tolerance"] = report.tolerance;
    j["passed"] = report.passed();
    j["distance"] = report.declared_distance ? json(*report.declared_distance) : json(nullptr);
    json conditions = json::object();
    const char* names[4] = {"C1", "C2", "C3", "C4"};
    for (int c = 0; c < 4; ++c) {
        const KLConditionReport& cond = report.conditions[static_cast<size_t>(c)];
        json jc;
        jc["passed"] = cond.passed;
        jc["worst_residual"] = cond.worst_residual;
        if (cond.violation) {
            json v;
            v["i"] = cond.violation->i;
            v["j"] = cond.violation->j;
            if (cond.violation->e) v["e"] = point_to_json(*cond.violation->e);
            if (cond.violation->f) v["f"] = point_to_json(*cond.violation->f);
            v["residual"] = cond.violation->residual;
            v["residual_estimate"] = cond.violation->residual_estimate;
            jc["violation"] = v;
        }
        conditions[names[c]] = jc;
    }
    j["conditions"] = conditions;
    return j.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.parent_path().empty() ? fs::path(".") : target.parent_path();
    const fs::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("short write to '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace simplexcodes
