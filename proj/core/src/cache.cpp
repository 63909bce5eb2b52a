#include "ellsolve/cache.hpp"

#include "ellsolve/families.hpp"

#include "json.hpp"

#include <chrono>
#include <fstream>

namespace ellsolve {

namespace {

constexpr const char* kToolkitVersion = "0.1.0";

nlohmann::json record_json(const SolutionRecord& r) {
    nlohmann::json j;
    j["family"] = r.family;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = rat_str(v);
    j["params"] = params;
    if (r.point) {
        if (r.point->infinity)
            j["point"] = nullptr;
        else
            j["point"] = {rat_str(r.point->x), rat_str(r.point->y)};
    }
    if (r.parametric_index) j["k"] = rat_str(*r.parametric_index);
    nlohmann::json tuple = nlohmann::json::array();
    for (const auto& [k, v] : r.tuple.entries) tuple.push_back({k, rat_str(v)});
    j["tuple"] = tuple;
    j["verified"] = r.verified;
    j["filter_status"] = r.filter_status;
    j["provenance"] = r.provenance;
    return j;
}

SolutionRecord record_from_json(const nlohmann::json& j) {
    SolutionRecord r;
    r.family = j.at("family").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        r.params[k] = parse_rational(v.get<std::string>());
    if (j.contains("point") && !j.at("point").is_null()) {
        const auto& pt = j.at("point");
        r.point = PointQ(parse_rational(pt.at(0).get<std::string>()),
                         parse_rational(pt.at(1).get<std::string>()));
    }
    if (j.contains("k")) r.parametric_index = parse_rational(j.at("k").get<std::string>());
    for (const auto& e : j.at("tuple"))
        r.tuple.entries.emplace_back(e.at(0).get<std::string>(),
                                     parse_rational(e.at(1).get<std::string>()));
    r.verified = j.at("verified").get<bool>();
    r.filter_status = j.value("filter_status", "");
    r.provenance = j.value("provenance", "");
    return r;
}

}  // namespace

std::string record_to_json(const SolutionRecord& record) {
    nlohmann::json j = record_json(record);
    j["version"] = kToolkitVersion;
    j["stamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count();
    return j.dump();
}

void cache_append(const std::string& path, const SolutionRecord& record) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path);
    out << record_to_json(record) << "\n";
}

CacheReadResult cache_query(const std::string& path, const CacheFilter& filter) {
    CacheReadResult result;
    std::ifstream in(path);
    if (!in) return result;  // absent file reads as empty
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SolutionRecord rec;
        try {
            rec = record_from_json(nlohmann::json::parse(line));
        } catch (const std::exception&) {
            ++result.skipped_corrupt;
            continue;
        }
        // re-verify on load; tampered tuples drop out here
        try {
            rec.verified = verify(rec.family, rec.params, rec.tuple);
        } catch (const std::exception&) {
            ++result.skipped_corrupt;
            continue;
        }
        if (!rec.verified) {
            ++result.skipped_unverified;
            continue;
        }
        if (filter && !filter(rec)) continue;
        result.records.push_back(std::move(rec));
    }
    return result;
}

}  // namespace ellsolve
