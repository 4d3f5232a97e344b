#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steepfront/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"steepfront: free-boundary sharpening and dispersive runs for "
                 "gradient-flux diffusion laws"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress informational output");

    auto* run = app.add_subcommand("run", "execute a configured run");
    run->add_option("--config", config_path, "run configuration file")->required();
    run->add_option("--out", out_dir, "output directory (overrides STEEPFRONT_OUT and "
                                      "the config)");

    auto* validate = app.add_subcommand("validate", "validate a configuration without "
                                                    "running");
    validate->add_option("--config", config_path, "run configuration file")->required();

    std::string report_dir;
    auto* report = app.add_subcommand("report", "summarize a finished run directory");
    report->add_option("dir", report_dir, "run output directory")->required();

    std::vector<std::string> sweep_configs;
    auto* sweep = app.add_subcommand("sweep", "run several configs, each into its own "
                                              "directory");
    sweep->add_option("configs", sweep_configs, "configuration files")->required();
    sweep->add_option("--out", out_dir, "output root; each run goes to <out>/<config-stem>");

    CLI11_PARSE(app, argc, argv);

    steepfront::RunOptions opt;
    opt.quiet = quiet;
    if (!out_dir.empty()) opt.out_override = out_dir;

    if (run->parsed()) {
        return steepfront::run_config(config_path, opt, std::cout);
    }
    if (validate->parsed()) {
        return steepfront::validate_config(config_path, std::cout);
    }
    if (report->parsed()) {
        return steepfront::report_run(report_dir, std::cout);
    }
    if (sweep->parsed()) {
        std::vector<std::filesystem::path> paths(sweep_configs.begin(), sweep_configs.end());
        return steepfront::run_sweep(paths, opt, std::cout);
    }
    return steepfront::kExitFailure;
}
