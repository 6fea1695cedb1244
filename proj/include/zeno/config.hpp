#pragma once

// Scenario configuration: one flat JSON object per run.
//
//   key        type     used by
//   ---------  -------  ------------------------------------------------------
//   mode       string   all; two_level_zeno | three_level_zeno | no_zeno |
//                       tunneling | ghz | sweep | ncrit
//   omega      number   three_level_zeno, no_zeno, tunneling, sweep, ncrit
//   phi        number   three-level modes (default -pi/2)
//   eta        number   three-level modes (default -0.2)
//   gamma      number   tunneling; optional for sweep (enables w_tunnel)
//   v          number   two_level_zeno
//   g, g_tilde number   ghz
//   n          integer  measurement intervals
//   dt         number   interval length, ns
//   t_total    number   total time, ns (any two of n, dt, t_total fix a schedule)
//   samples    integer  no_zeno sampling intervals (default 100)
//   steps      integer  tunneling sub-steps (default 0 = automatic)
//   axis       string   sweep: n | gamma | omega | dt
//   grid       array    sweep: strictly monotone axis values
//   n_max      integer  ncrit search bound (default 400)
//   output     string   output CSV path
//   seed       integer  reserved for randomized utilities (default 0)
//
// Unknown keys and wrongly typed values are rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zeno/engine.hpp"
#include "zeno/models.hpp"

namespace zeno {

enum class Mode { TwoLevelZeno, ThreeLevelZeno, NoZeno, Tunneling, Ghz, Sweep, NCrit };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);
const std::vector<std::string>& all_mode_names();
const std::vector<std::string>& config_keys();

struct ScenarioConfig {
    Mode mode = Mode::ThreeLevelZeno;
    ModelSpec model;
    std::optional<int> n;
    std::optional<double> dt;
    std::optional<double> t_total;
    int samples = 100;
    long steps = 0;
    std::string axis;
    std::vector<double> grid;
    int n_max = 400;
    std::string output_path;
    std::uint64_t seed = 0;
    std::set<std::string> present;  ///< keys given explicitly

    bool has(const std::string& key) const { return present.count(key) != 0; }

    /// Resolves (n, dt, t_total) into a schedule; any two suffice, three must agree.
    ZenoSchedule schedule() const;
    /// Total time from t_total or n * dt.
    double total_time() const;
};

/// Parses and validates a flat config object; throws ConfigError.
ScenarioConfig parse_config(const nlohmann::json& doc);

/// Schedule of one sweep grid point. Along n (dt) the total time is held
/// fixed when t_total is given, otherwise dt (n) is held.
ZenoSchedule sweep_point_schedule(const ScenarioConfig& cfg, double value);

/// Reads a JSON document from disk; throws ConfigError if the file cannot be
/// read or does not parse.
nlohmann::json read_config_file(const std::filesystem::path& path);

}  // namespace zeno
