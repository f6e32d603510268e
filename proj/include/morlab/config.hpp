#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "morlab/experiments.hpp"
#include "morlab/report.hpp"

namespace morlab {

struct RunOverrides {
    double resolution = 0;   // override grid spacing
    std::uint64_t seed = 0;  // 0: keep config seed
    int threads = -1;        // -1: keep config value
    std::string out_dir;     // empty: keep config value
    std::string format;      // json / csv / both
    bool force = false;      // bypass the quadrature budget guard
};

struct RunResult {
    std::vector<Report> reports;
    int failed = 0;
    std::string out_dir;
};

/// Parse + validate a config document. Throws std::invalid_argument with
/// the offending name on unresolved references or range violations.
class ExperimentConfig {
public:
    static ExperimentConfig from_json(const nlohmann::json& doc);
    static ExperimentConfig from_file(const std::string& path);

    const nlohmann::json& doc() const { return doc_; }
    GridSpec grid() const;
    std::uint64_t seed() const;
    int threads() const;
    std::string out_dir() const;
    std::string format() const;
    std::size_t experiment_count() const;

    /// Estimated kernel evaluations of the double-quadrature experiments.
    double estimated_cost(const RunOverrides& o = {}) const;
    std::string describe(const RunOverrides& o = {}) const;
    RunResult run(const RunOverrides& o = {}) const;

private:
    nlohmann::json doc_;
};

/// Built-in presets (weighted / variable-exponent corollary setups, a
/// smoke config, and the designed-to-fail control suite).
std::vector<std::string> preset_names();
nlohmann::json preset_config(const std::string& name);

constexpr double kQuadratureBudget = 1e9;

}  // namespace morlab
