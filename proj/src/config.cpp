#include "zeno/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zeno/error.hpp"

namespace zeno {

using nlohmann::json;

namespace {

struct ModeInfo {
    Mode mode;
    const char* name;
    const char* requirements;
};

constexpr ModeInfo kModes[] = {
    {Mode::TwoLevelZeno, "two_level_zeno", "v and a schedule (two of n, dt, t_total)"},
    {Mode::ThreeLevelZeno, "three_level_zeno", "omega and a schedule (two of n, dt, t_total)"},
    {Mode::NoZeno, "no_zeno", "omega and t_total (or n and dt)"},
    {Mode::Tunneling, "tunneling", "omega, gamma and t_total (or n and dt)"},
    {Mode::Ghz, "ghz", "g and g_tilde with g != g_tilde"},
    {Mode::Sweep, "sweep", "axis, grid, omega and enough of n, dt, t_total to fix every grid point's schedule"},
    {Mode::NCrit, "ncrit", "omega and t_total (n_max defaults to 400)"},
};

const ModeInfo& info(Mode mode) {
    for (const auto& m : kModes)
        if (m.mode == mode) return m;
    throw std::logic_error("unhandled mode");
}

[[noreturn]] void missing(Mode mode, const std::string& key) {
    throw ConfigError(std::string("mode ") + info(mode).name + " is missing '" + key + "'; it requires " +
                      info(mode).requirements);
}

double get_number(const json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError("key '" + key + "' must be finite");
    return x;
}

long long get_integer(const json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (v.is_number_integer()) return v.get<long long>();
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9e15) return static_cast<long long>(x);
    }
    throw ConfigError("key '" + key + "' must be an integer");
}

std::string get_string(const json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (!v.is_string()) throw ConfigError("key '" + key + "' must be a string");
    return v.get<std::string>();
}

bool is_integral(double x) { return std::isfinite(x) && x == std::round(x); }

// Schedule for one sweep grid point. Along n (dt) the total time is held when
// given, otherwise dt (n) is held.
ZenoSchedule point_schedule(const ScenarioConfig& cfg, double value) {
    if (cfg.axis == "n") {
        if (!is_integral(value) || value < 1) throw ConfigError("n-axis grid values must be positive integers");
        const int n = static_cast<int>(value);
        if (cfg.t_total) return ZenoSchedule::over(*cfg.t_total, n);
        if (cfg.dt) return {n, *cfg.dt};
        throw ConfigError("an n sweep needs dt or t_total");
    }
    if (cfg.axis == "dt") {
        if (!(value > 0)) throw ConfigError("dt-axis grid values must be > 0");
        if (cfg.t_total) {
            const double ratio = *cfg.t_total / value;
            const double n = std::round(ratio);
            if (n < 1 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio))
                throw ConfigError("dt grid value " + std::to_string(value) + " does not divide t_total");
            return {static_cast<int>(n), value};
        }
        if (cfg.n) return {*cfg.n, value};
        throw ConfigError("a dt sweep needs n or t_total");
    }
    return cfg.schedule();
}

}  // namespace

std::string_view to_string(Mode mode) { return info(mode).name; }

std::optional<Mode> parse_mode(std::string_view name) {
    for (const auto& m : kModes)
        if (name == m.name) return m.mode;
    return std::nullopt;
}

const std::vector<std::string>& all_mode_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& m : kModes) out.emplace_back(m.name);
        return out;
    }();
    return names;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{"mode",  "omega",   "phi",     "eta",  "gamma", "v",
                                               "g",     "g_tilde", "n",       "dt",   "t_total", "samples",
                                               "steps", "axis",    "grid",    "n_max", "output", "seed"};
    return keys;
}

ZenoSchedule ScenarioConfig::schedule() const {
    ZenoSchedule s;
    if (n && dt) {
        s = {*n, *dt};
        if (t_total && std::abs(s.total_time() - *t_total) > 1e-9 * std::max(1.0, *t_total))
            throw ConfigError("n * dt does not equal t_total");
    } else if (n && t_total) {
        s = ZenoSchedule::over(*t_total, *n);
    } else if (dt && t_total) {
        const double ratio = *t_total / *dt;
        const double rounded = std::round(ratio);
        if (rounded < 1 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
            throw ConfigError("t_total is not an integer multiple of dt");
        s = {static_cast<int>(rounded), *dt};
    } else {
        throw ConfigError("a schedule needs two of n, dt, t_total");
    }
    if (s.n < 1) throw ConfigError("n must be >= 1");
    if (!(s.dt > 0)) throw ConfigError("dt must be > 0");
    return s;
}

double ScenarioConfig::total_time() const {
    if (t_total) return *t_total;
    return schedule().total_time();
}

ScenarioConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    const auto& keys = config_keys();
    for (const auto& [key, value] : doc.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError("unknown config key '" + key + "'");
        if (value.is_object() || (value.is_array() && key != "grid"))
            throw ConfigError("key '" + key + "' must be a scalar; the config is a flat document");
    }

    ScenarioConfig cfg;
    for (const auto& [key, value] : doc.items()) cfg.present.insert(key);

    if (!cfg.has("mode")) throw ConfigError("missing 'mode'; one of two_level_zeno, three_level_zeno, no_zeno, tunneling, ghz, sweep, ncrit");
    const auto mode_name = get_string(doc, "mode");
    const auto mode = parse_mode(mode_name);
    if (!mode) throw ConfigError("unknown mode '" + mode_name + "'");
    cfg.mode = *mode;

    auto number = [&](const char* key, double& target) {
        if (cfg.has(key)) target = get_number(doc, key);
    };
    number("omega", cfg.model.omega);
    number("phi", cfg.model.phi);
    number("eta", cfg.model.eta);
    number("gamma", cfg.model.gamma);
    number("v", cfg.model.v);
    number("g", cfg.model.g);
    number("g_tilde", cfg.model.g_tilde);

    if (cfg.has("n")) {
        const auto n = get_integer(doc, "n");
        if (n < 1 || n > 100'000'000) throw ConfigError("n must be in [1, 1e8]");
        cfg.n = static_cast<int>(n);
    }
    if (cfg.has("dt")) cfg.dt = get_number(doc, "dt");
    if (cfg.has("t_total")) cfg.t_total = get_number(doc, "t_total");
    if (cfg.dt && !(*cfg.dt > 0)) throw ConfigError("dt must be > 0");
    if (cfg.t_total && !(*cfg.t_total > 0)) throw ConfigError("t_total must be > 0");

    if (cfg.has("samples")) {
        const auto s = get_integer(doc, "samples");
        if (s < 1 || s > 10'000'000) throw ConfigError("samples must be in [1, 1e7]");
        cfg.samples = static_cast<int>(s);
    }
    if (cfg.has("steps")) {
        const auto s = get_integer(doc, "steps");
        if (s < 0 || s > 100'000'000) throw ConfigError("steps must be in [0, 1e8]");
        cfg.steps = static_cast<long>(s);
    }
    if (cfg.has("n_max")) {
        const auto m = get_integer(doc, "n_max");
        if (m < 1 || m > 1'000'000) throw ConfigError("n_max must be in [1, 1e6]");
        cfg.n_max = static_cast<int>(m);
    }
    if (cfg.has("seed")) {
        const auto s = get_integer(doc, "seed");
        if (s < 0) throw ConfigError("seed must be non-negative");
        cfg.seed = static_cast<std::uint64_t>(s);
    }
    if (cfg.has("output")) cfg.output_path = get_string(doc, "output");
    if (cfg.has("axis")) cfg.axis = get_string(doc, "axis");
    if (cfg.has("grid")) {
        const auto& g = doc.at("grid");
        if (!g.is_array()) throw ConfigError("key 'grid' must be an array of numbers");
        for (const auto& x : g) {
            if (!x.is_number() || !std::isfinite(x.get<double>()))
                throw ConfigError("key 'grid' must be an array of finite numbers");
            cfg.grid.push_back(x.get<double>());
        }
    }

    try {
        cfg.model.validate();
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }

    auto require = [&](const char* key) {
        if (!cfg.has(key)) missing(cfg.mode, key);
    };
    auto require_time = [&] {
        if (!cfg.t_total && !(cfg.n && cfg.dt)) missing(cfg.mode, "t_total");
        (void)cfg.total_time();
    };

    switch (cfg.mode) {
        case Mode::TwoLevelZeno:
            require("v");
            cfg.model.dim = 2;
            (void)cfg.schedule();
            break;
        case Mode::ThreeLevelZeno:
            require("omega");
            (void)cfg.schedule();
            break;
        case Mode::NoZeno:
            require("omega");
            require_time();
            break;
        case Mode::Tunneling:
            require("omega");
            require("gamma");
            require_time();
            break;
        case Mode::Ghz:
            require("g");
            require("g_tilde");
            cfg.model.dim = 8;
            if (cfg.model.g == cfg.model.g_tilde) throw ConfigError("ghz mode requires g != g_tilde");
            break;
        case Mode::Sweep: {
            require("axis");
            require("grid");
            require("omega");
            static const std::vector<std::string> axes{"n", "gamma", "omega", "dt"};
            if (std::find(axes.begin(), axes.end(), cfg.axis) == axes.end())
                throw ConfigError("invalid sweep axis '" + cfg.axis + "'; valid axes: n, gamma, omega, dt");
            if (cfg.grid.empty()) throw ConfigError("sweep grid must not be empty");
            const bool increasing = std::is_sorted(cfg.grid.begin(), cfg.grid.end(), std::less_equal<>());
            const bool decreasing = std::is_sorted(cfg.grid.begin(), cfg.grid.end(), std::greater_equal<>());
            if (cfg.grid.size() > 1 && !increasing && !decreasing)
                throw ConfigError("sweep grid must be strictly monotone");
            for (double value : cfg.grid) {
                (void)point_schedule(cfg, value);
                if ((cfg.axis == "gamma" || cfg.axis == "omega") && value < 0)
                    throw ConfigError("sweep grid values for '" + cfg.axis + "' must be >= 0");
            }
            break;
        }
        case Mode::NCrit:
            require("omega");
            require_time();
            break;
    }
    return cfg;
}

ZenoSchedule sweep_point_schedule(const ScenarioConfig& cfg, double value) { return point_schedule(cfg, value); }

json read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
    }
}

}  // namespace zeno
