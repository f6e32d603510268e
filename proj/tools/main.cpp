#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "morlab/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"morlab: config-driven verification runs for Morrey-space norm engines "
                 "and bilinear singular/fractional integral operators"};

    std::string config_path, out_dir, format;
    double resolution = 0;
    std::uint64_t seed = 0;
    int threads = -1;
    bool force = false, list = false, describe = false;

    app.add_option("--config", config_path, "experiment config (JSON) or preset:<name>");
    app.add_option("--out", out_dir, "report output directory");
    app.add_option("--resolution-override", resolution, "override grid spacing h");
    app.add_option("--seed", seed, "override the config seed");
    app.add_option("--threads", threads, "worker threads (0 = hardware)");
    app.add_option("--format", format, "report format: json, csv, or both")
        ->check(CLI::IsMember({"json", "csv", "both", ""}));
    app.add_flag("--force", force, "bypass the double-quadrature budget guard");
    app.add_flag("--list", list, "enumerate built-in experiment presets");
    app.add_flag("--describe", describe, "print the resolved plan without running");

    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const std::string& name : morlab::preset_names()) {
            auto doc = morlab::preset_config(name);
            std::cout << name << ": " << doc.value("description", "") << "\n";
        }
        return 0;
    }
    if (config_path.empty()) {
        std::cerr << "a config is required (use --config PATH, --config preset:<name>, or "
                     "--list)\n";
        return 64;
    }

    try {
        morlab::ExperimentConfig cfg =
            config_path.rfind("preset:", 0) == 0
                ? morlab::ExperimentConfig::from_json(
                      morlab::preset_config(config_path.substr(7)))
                : morlab::ExperimentConfig::from_file(config_path);

        morlab::RunOverrides o;
        o.resolution = resolution;
        o.seed = seed;
        o.threads = threads;
        o.out_dir = out_dir;
        o.format = format;
        o.force = force;

        if (describe) {
            std::cout << cfg.describe(o);
            return 0;
        }
        morlab::RunResult res = cfg.run(o);
        for (const morlab::Report& r : res.reports)
            std::cout << r.experiment << ": " << to_string(r.verdict)
                      << " (headline " << r.headline << ")\n";
        std::cout << res.reports.size() - res.failed << "/" << res.reports.size()
                  << " experiments passed; reports in " << res.out_dir << "\n";
        return res.failed;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 70;
    }
}
