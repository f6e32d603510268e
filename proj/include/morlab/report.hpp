#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace morlab {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct SampleRow {
    std::string id;       // input / region identifier
    double measured = 0;  // quantity under test
    double bound = 0;     // the side it is compared against
    double ratio = 0;     // measured / bound (or the declared comparison)
};

/// Structured record of one verification run. The verdict is a pure
/// function of the table, the threshold, and the ladder (re-derivable
/// from the serialized report).
struct Report {
    std::string experiment;  // instance id
    std::string type;        // experiment kind tag
    std::string anchor;      // free-form annotation echoed from the config
    nlohmann::json config_echo;
    std::vector<SampleRow> table;
    double headline = 0;
    double threshold = 0;
    std::vector<double> ladder;  // refinement / extension sweep of the headline
    double ladder_growth_cap = 1.1;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> notes;
    double wall_seconds = 0;
    std::string timestamp;

    nlohmann::json to_json() const;
    /// FNV-1a over the canonical serialization with volatile fields
    /// (wall clock, timestamp) removed.
    std::uint64_t determinism_hash() const;
    void write_json(const std::string& path) const;
    void write_csv(const std::string& path) const;
};

/// pass iff every ratio <= threshold and the ladder shows non-growth
/// (last <= first * cap); inconclusive on an empty table.
Verdict derive_verdict(const std::vector<SampleRow>& table, double threshold,
                       const std::vector<double>& ladder, double growth_cap);

class StopWatch {
public:
    StopWatch();
    double seconds() const;

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace morlab
