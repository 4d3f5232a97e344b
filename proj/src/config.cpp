#include "steepfront/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "steepfront/error.hpp"

namespace steepfront {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + text + "'");
    }
}

int parse_int(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError(key + ": expected an integer, got '" + text + "'");
    }
    return i;
}

bool parse_bool(const std::string& key, const std::string& text) {
    const std::string t = lower(trim(text));
    if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
    if (t == "false" || t == "no" || t == "off" || t == "0") return false;
    throw ConfigError(key + ": expected a boolean, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(key, item));
    }
    return out;
}

// "x:y, x:y, ..." pairs
std::vector<std::pair<double, double>> parse_pairs(const std::string& key,
                                                   const std::string& text) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ConfigError(key + ": expected 'x:y' pairs, got '" + item + "'");
        }
        out.emplace_back(parse_double(key, trim(item.substr(0, colon))),
                         parse_double(key, trim(item.substr(colon + 1))));
    }
    return out;
}

const char* const kKnownKeys[] = {
    "mode",
    "law.family",
    "law.m",
    "law.q",
    "law.alpha",
    "data.preset",
    "data.profile",
    "data.values",
    "grid.n_cells",
    "grid.x_min",
    "grid.x_max",
    "solver.dt_init",
    "solver.dt_max",
    "solver.epsilon",
    "solver.newton_tol",
    "solver.newton_max_iter",
    "solver.extinction_threshold",
    "output.times",
    "output.dir",
    "output.plots",
};

} // namespace

std::string to_string(RunMode mode) {
    switch (mode) {
    case RunMode::TypeII: return "typeII";
    case RunMode::TypeI: return "typeI";
    case RunMode::Coexist: return "coexist";
    case RunMode::Profile: return "profile";
    case RunMode::Rates: return "rates";
    }
    return "?";
}

ConfigFile ConfigFile::parse_text(const std::string& text, const std::string& origin) {
    ConfigFile cf;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> problems;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            problems.push_back(origin + ":" + std::to_string(lineno) +
                               ": expected 'key = value', got '" + line + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            problems.push_back(origin + ":" + std::to_string(lineno) + ": empty key");
            continue;
        }
        if (cf.entries.count(key)) {
            problems.push_back(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                               key + "' (first set on line " +
                               std::to_string(cf.entries[key].line) + ")");
            continue;
        }
        cf.entries[key] = Entry{value, lineno};
    }
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += p + "\n";
        throw ConfigError(msg);
    }
    return cf;
}

ConfigFile ConfigFile::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), path.filename().string());
}

namespace {

struct Validator {
    const ConfigFile& cf;
    std::vector<std::string> problems;
    std::vector<std::string> seen;

    explicit Validator(const ConfigFile& c) : cf(c) {}

    const std::string* get(const std::string& key) {
        seen.push_back(key);
        const auto it = cf.entries.find(key);
        return it == cf.entries.end() ? nullptr : &it->second.value;
    }

    template <typename F>
    void with(const std::string& key, F&& f) {
        if (const std::string* v = get(key)) {
            try {
                f(*v);
            } catch (const ConfigError& e) {
                problems.push_back(e.what());
            }
        }
    }

    void fail(const std::string& msg) { problems.push_back(msg); }

    void check_unknown() {
        for (const auto& [key, entry] : cf.entries) {
            const bool known =
                std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) !=
                std::end(kKnownKeys);
            if (!known) {
                problems.push_back("unknown key '" + key + "' (line " +
                                   std::to_string(entry.line) + ")");
            }
        }
    }
};

} // namespace

RunConfig load_config(const std::filesystem::path& path) {
    const ConfigFile cf = ConfigFile::parse_file(path);
    RunConfig rc;
    Validator v(cf);
    v.check_unknown();

    bool have_mode = false;
    v.with("mode", [&](const std::string& s) {
        const std::string m = lower(s);
        if (m == "typeii") rc.mode = RunMode::TypeII;
        else if (m == "typei") rc.mode = RunMode::TypeI;
        else if (m == "coexist") rc.mode = RunMode::Coexist;
        else if (m == "profile") rc.mode = RunMode::Profile;
        else if (m == "rates") rc.mode = RunMode::Rates;
        else throw ConfigError("mode: expected typeII | typeI | coexist | profile | rates, "
                               "got '" + s + "'");
        have_mode = true;
    });
    if (!cf.entries.count("mode")) v.fail("mode is required");

    v.with("law.family", [&](const std::string& s) {
        const std::string f = lower(s);
        if (f != "power" && f != "curvature") {
            throw ConfigError("law.family: expected power | curvature, got '" + s + "'");
        }
        rc.law.family = f;
    });
    v.with("law.m", [&](const std::string& s) { rc.law.m = parse_double("law.m", s); });
    v.with("law.q", [&](const std::string& s) { rc.law.q = parse_double("law.q", s); });
    v.with("law.alpha",
           [&](const std::string& s) { rc.law.alpha = parse_double("law.alpha", s); });

    v.with("data.preset", [&](const std::string& s) { rc.data.preset = lower(s); });
    v.with("data.profile",
           [&](const std::string& s) { rc.data.profile = parse_pairs("data.profile", s); });
    v.with("data.values",
           [&](const std::string& s) { rc.data.values = parse_pairs("data.values", s); });

    v.with("grid.n_cells", [&](const std::string& s) {
        rc.grid.n_cells = parse_int("grid.n_cells", s);
        if (rc.grid.n_cells < 2) throw ConfigError("grid.n_cells: need at least 2 cells");
    });
    v.with("grid.x_min",
           [&](const std::string& s) { rc.grid.x_min = parse_double("grid.x_min", s); });
    v.with("grid.x_max",
           [&](const std::string& s) { rc.grid.x_max = parse_double("grid.x_max", s); });

    v.with("solver.dt_init", [&](const std::string& s) {
        rc.solver.dt_init = parse_double("solver.dt_init", s);
        if (!(rc.solver.dt_init > 0.0)) throw ConfigError("solver.dt_init must be positive");
    });
    v.with("solver.dt_max", [&](const std::string& s) {
        rc.solver.dt_max = parse_double("solver.dt_max", s);
        if (!(rc.solver.dt_max > 0.0)) throw ConfigError("solver.dt_max must be positive");
    });
    v.with("solver.epsilon", [&](const std::string& s) {
        rc.solver.epsilon = parse_double("solver.epsilon", s);
        if (rc.solver.epsilon < 0.0) throw ConfigError("solver.epsilon must be nonnegative");
    });
    v.with("solver.newton_tol", [&](const std::string& s) {
        rc.solver.newton_tol = parse_double("solver.newton_tol", s);
        if (!(rc.solver.newton_tol > 0.0)) {
            throw ConfigError("solver.newton_tol must be positive");
        }
    });
    v.with("solver.newton_max_iter", [&](const std::string& s) {
        rc.solver.newton_max_iter = parse_int("solver.newton_max_iter", s);
        if (rc.solver.newton_max_iter < 1) {
            throw ConfigError("solver.newton_max_iter must be at least 1");
        }
    });
    v.with("solver.extinction_threshold", [&](const std::string& s) {
        rc.solver.extinction_threshold = parse_double("solver.extinction_threshold", s);
        if (!(rc.solver.extinction_threshold > 0.0)) {
            throw ConfigError("solver.extinction_threshold must be positive");
        }
    });

    v.with("output.times",
           [&](const std::string& s) { rc.output.times = parse_list("output.times", s); });
    v.with("output.dir", [&](const std::string& s) { rc.output.dir = s; });
    v.with("output.plots",
           [&](const std::string& s) { rc.output.plots = parse_bool("output.plots", s); });

    if (rc.solver.dt_init > rc.solver.dt_max) {
        v.fail("solver.dt_init must not exceed solver.dt_max");
    }
    for (std::size_t i = 0; i < rc.output.times.size(); ++i) {
        if (rc.output.times[i] < 0.0 ||
            (i > 0 && rc.output.times[i] <= rc.output.times[i - 1])) {
            v.fail("output.times must be nonnegative and strictly increasing");
            break;
        }
    }

    if (have_mode) {
        const bool needs_solve = rc.mode == RunMode::TypeII || rc.mode == RunMode::TypeI ||
                                 rc.mode == RunMode::Coexist;
        if (needs_solve && rc.output.times.empty()) {
            v.fail("output.times is required for solver modes");
        }

        // law/mode consistency
        if (rc.mode == RunMode::TypeII || rc.mode == RunMode::TypeI ||
            rc.mode == RunMode::Coexist) {
            if (rc.law.family.empty()) {
                v.fail("law.family is required for mode " + to_string(rc.mode));
            } else if (rc.law.family == "power") {
                if (rc.law.alpha) v.fail("law.alpha does not apply to the power family");
                if (rc.law.m && rc.law.q && *rc.law.m != -*rc.law.q) {
                    v.fail("law.m and law.q are inconsistent: the conjugate exponent is "
                           "q = -m");
                }
                if (!rc.law.m && !rc.law.q) v.fail("power family needs law.m or law.q");
            } else if (rc.law.family == "curvature") {
                if (rc.law.m || rc.law.q) {
                    v.fail("law.m / law.q do not apply to the curvature family; use "
                           "law.alpha");
                }
                if (!rc.law.alpha) v.fail("curvature family needs law.alpha");
            }
        }

        const double q_eff = rc.law.q ? *rc.law.q : (rc.law.m ? -*rc.law.m : 0.0);
        switch (rc.mode) {
        case RunMode::TypeII:
            if (rc.law.family == "power" && (rc.law.m || rc.law.q) && !(q_eff > 0.0)) {
                v.fail("typeII needs a bounded flux at infinity: power exponent m < 0, "
                       "i.e. conjugate exponent q > 0 (got q=" + std::to_string(q_eff) +
                       ")");
            }
            if (rc.law.family == "curvature" && rc.law.alpha && !(*rc.law.alpha > -0.5)) {
                v.fail("typeII needs a bounded flux at infinity: curvature alpha > -1/2");
            }
            if (!rc.data.profile.empty() && !rc.data.values.empty()) {
                v.fail("give either data.profile or data.values, not both");
            }
            break;
        case RunMode::TypeI:
            if (rc.law.family == "power" && (rc.law.m || rc.law.q)) {
                const double m_eff = rc.law.m ? *rc.law.m : -*rc.law.q;
                if (m_eff <= -1.0) {
                    v.fail("typeI with power exponent m = " + std::to_string(m_eff) +
                           ": no finite-mass line solutions exist for m <= -1");
                }
            }
            if (!rc.grid.x_min || !rc.grid.x_max) {
                v.fail("typeI requires grid.x_min and grid.x_max");
            } else if (!(*rc.grid.x_min < *rc.grid.x_max)) {
                v.fail("grid.x_min must be below grid.x_max");
            }
            break;
        case RunMode::Coexist: {
            if (rc.law.family != "power") {
                v.fail("coexist mode needs the power family");
            } else if (rc.law.m || rc.law.q) {
                const double m_eff = rc.law.m ? *rc.law.m : -*rc.law.q;
                if (!(m_eff > -1.0 && m_eff < 0.0)) {
                    v.fail("coexistence of both solution types needs -1 < m < 0");
                }
            }
            if (!rc.grid.x_min || !rc.grid.x_max) {
                // the profile presets live on [-1, 1]; default the line grid
                rc.grid.x_min = rc.grid.x_min.value_or(-3.0);
                rc.grid.x_max = rc.grid.x_max.value_or(3.0);
            }
            break;
        }
        case RunMode::Profile:
            if (!rc.law.q && !rc.law.alpha) {
                v.fail("profile mode needs law.q (eigenprofile) or law.alpha > 0 "
                       "(similarity profile)");
            }
            if (rc.law.q && !(*rc.law.q > 0.0)) {
                v.fail("the conjugate exponent must be positive (q > 0), got q=" +
                       std::to_string(*rc.law.q));
            }
            if (rc.law.alpha && !(*rc.law.alpha > 0.0)) {
                v.fail("similarity profiles need alpha > 0");
            }
            break;
        case RunMode::Rates:
            if (!rc.law.q) {
                v.fail("rates mode needs law.q");
            } else if (!(*rc.law.q > 0.0)) {
                v.fail("the conjugate exponent must be positive (q > 0), got q=" +
                       std::to_string(*rc.law.q));
            }
            break;
        }

        // data preset names
        if (!rc.data.preset.empty()) {
            const bool profile_preset =
                rc.data.preset == "symmetric-cos" || rc.data.preset == "asymmetric-poly";
            const bool line_preset =
                rc.data.preset == "unit-bump" || rc.data.preset == "source-bump";
            if (!profile_preset && !line_preset) {
                v.fail("unknown data.preset '" + rc.data.preset +
                       "' (expected symmetric-cos, asymmetric-poly, unit-bump or "
                       "source-bump)");
            } else if (rc.mode == RunMode::TypeI && !line_preset) {
                v.fail("typeI needs a line preset (unit-bump or source-bump)");
            } else if ((rc.mode == RunMode::TypeII || rc.mode == RunMode::Coexist) &&
                       !profile_preset) {
                v.fail("mode " + to_string(rc.mode) +
                       " needs a profile preset (symmetric-cos or asymmetric-poly)");
            }
        } else if (rc.mode == RunMode::TypeII || rc.mode == RunMode::Coexist) {
            if (rc.data.profile.empty()) rc.data.preset = "symmetric-cos";
        } else if (rc.mode == RunMode::TypeI) {
            if (rc.data.values.empty()) rc.data.preset = "unit-bump";
        }
    }

    if (!v.problems.empty()) {
        std::string msg;
        for (const auto& p : v.problems) msg += p + "\n";
        throw ConfigError(msg);
    }
    return rc;
}

std::string validation_report(const std::filesystem::path& path) {
    try {
        (void)load_config(path);
        return "ok";
    } catch (const ConfigError& e) {
        return e.what();
    }
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::vector<std::string> RunConfig::resolved() const {
    std::vector<std::string> out;
    out.push_back("mode = " + to_string(mode));
    if (!law.family.empty()) out.push_back("law.family = " + law.family);
    if (law.m) out.push_back("law.m = " + fmt(*law.m));
    if (law.q) out.push_back("law.q = " + fmt(*law.q));
    if (law.alpha) out.push_back("law.alpha = " + fmt(*law.alpha));
    if (!data.preset.empty()) out.push_back("data.preset = " + data.preset);
    if (!data.profile.empty()) {
        std::string pairs;
        for (const auto& [x, u] : data.profile) {
            if (!pairs.empty()) pairs += ", ";
            pairs += fmt(x) + ":" + fmt(u);
        }
        out.push_back("data.profile = " + pairs);
    }
    if (!data.values.empty()) {
        std::string pairs;
        for (const auto& [x, val] : data.values) {
            if (!pairs.empty()) pairs += ", ";
            pairs += fmt(x) + ":" + fmt(val);
        }
        out.push_back("data.values = " + pairs);
    }
    out.push_back("grid.n_cells = " + std::to_string(grid.n_cells));
    if (grid.x_min) out.push_back("grid.x_min = " + fmt(*grid.x_min));
    if (grid.x_max) out.push_back("grid.x_max = " + fmt(*grid.x_max));
    out.push_back("solver.dt_init = " + fmt(solver.dt_init));
    out.push_back("solver.dt_max = " + fmt(solver.dt_max));
    out.push_back("solver.epsilon = " + fmt(solver.epsilon));
    out.push_back("solver.newton_tol = " + fmt(solver.newton_tol));
    out.push_back("solver.newton_max_iter = " + std::to_string(solver.newton_max_iter));
    out.push_back("solver.extinction_threshold = " + fmt(solver.extinction_threshold));
    if (!output.times.empty()) {
        std::string times;
        for (double t : output.times) {
            if (!times.empty()) times += ", ";
            times += fmt(t);
        }
        out.push_back("output.times = " + times);
    }
    out.push_back("output.dir = " + output.dir);
    out.push_back(std::string("output.plots = ") + (output.plots ? "true" : "false"));
    return out;
}

} // namespace steepfront
