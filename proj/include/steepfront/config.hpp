#ifndef STEEPFRONT_CONFIG_HPP
#define STEEPFRONT_CONFIG_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace steepfront {

enum class RunMode { TypeII, TypeI, Coexist, Profile, Rates };

std::string to_string(RunMode mode);

/// Flat key = value configuration file with dotted section names, '#'
/// comments and blank lines. Keys are unique; values keep their raw text.
struct ConfigFile {
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Entry> entries;

    static ConfigFile parse_file(const std::filesystem::path& path);
    static ConfigFile parse_text(const std::string& text, const std::string& origin);
};

struct LawSpec {
    std::string family; // "power" | "curvature"
    std::optional<double> m;     // power exponent of the source law
    std::optional<double> q;     // conjugate exponent (power, q = -m)
    std::optional<double> alpha; // curvature exponent
};

struct DataSpec {
    std::string preset; // named initial data
    std::vector<std::pair<double, double>> profile; // inline (x, u) samples
    std::vector<std::pair<double, double>> values;  // inline (x, v) samples
};

struct GridSpec {
    int n_cells = 400;
    std::optional<double> x_min;
    std::optional<double> x_max;
};

struct SolverSpec {
    double dt_init = 1e-5;
    double dt_max = 1e-3;
    double epsilon = 1e-8;
    double newton_tol = 1e-10;
    int newton_max_iter = 25;
    double extinction_threshold = 1e-6;
};

struct OutputSpec {
    std::vector<double> times;
    std::string dir = "out";
    bool plots = true;
};

struct RunConfig {
    RunMode mode = RunMode::TypeII;
    LawSpec law;
    DataSpec data;
    GridSpec grid;
    SolverSpec solver;
    OutputSpec output;

    /// Sorted key = value echo of every resolved setting.
    std::vector<std::string> resolved() const;
};

/// Parse and fully validate; throws ConfigError with every problem listed.
RunConfig load_config(const std::filesystem::path& path);

/// Validation report without running: "ok" or the list of problems.
std::string validation_report(const std::filesystem::path& path);

} // namespace steepfront

#endif
