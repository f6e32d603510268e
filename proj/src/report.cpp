#include "morlab/report.hpp"

#include <chrono>
#include <fstream>

namespace morlab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "inconclusive";
    }
}

Verdict derive_verdict(const std::vector<SampleRow>& table, double threshold,
                       const std::vector<double>& ladder, double growth_cap) {
    if (table.empty()) return Verdict::inconclusive;
    for (const SampleRow& r : table)
        if (!(r.ratio <= threshold)) return Verdict::fail;
    if (ladder.size() >= 2) {
        double first = ladder.front(), last = ladder.back();
        double floor = 1e-12;
        if (!(last <= std::max(first, floor) * growth_cap + floor)) return Verdict::fail;
    }
    return Verdict::pass;
}

namespace {

nlohmann::json report_core(const Report& r) {
    nlohmann::json j;
    j["experiment"] = r.experiment;
    j["type"] = r.type;
    j["anchor"] = r.anchor;
    j["config"] = r.config_echo;
    nlohmann::json rows = nlohmann::json::array();
    for (const SampleRow& row : r.table)
        rows.push_back({{"id", row.id}, {"measured", row.measured}, {"bound", row.bound},
                        {"ratio", row.ratio}});
    j["table"] = rows;
    j["headline"] = r.headline;
    j["threshold"] = r.threshold;
    j["ladder"] = r.ladder;
    j["ladder_growth_cap"] = r.ladder_growth_cap;
    j["verdict"] = to_string(r.verdict);
    j["notes"] = r.notes;
    return j;
}

}  // namespace

nlohmann::json Report::to_json() const {
    nlohmann::json j = report_core(*this);
    j["determinism_hash"] = determinism_hash();
    j["timing"] = {{"wall_seconds", wall_seconds}, {"timestamp", timestamp}};
    return j;
}

std::uint64_t Report::determinism_hash() const {
    std::string s = report_core(*this).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void Report::write_json(const std::string& path) const {
    std::ofstream os(path);
    os << to_json().dump(2) << "\n";
}

void Report::write_csv(const std::string& path) const {
    std::ofstream os(path);
    os << "id,measured,bound,ratio\n";
    os.precision(17);
    for (const SampleRow& r : table)
        os << '"' << r.id << "\"," << r.measured << ',' << r.bound << ',' << r.ratio << "\n";
}

StopWatch::StopWatch() : t0_(std::chrono::steady_clock::now()) {}

double StopWatch::seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
}

}  // namespace morlab
