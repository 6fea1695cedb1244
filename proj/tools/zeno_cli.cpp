// zeno: run Zeno leakage-suppression scenarios from a JSON config.
//
//   zeno <mode> [--config file.json] [--omega X] [--n N] ... [--out trace.csv]
//   zeno run --config file.json
//
// Flags override config keys. Exit codes: 0 ok, 1 config, 2 runtime, 3 I/O.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zeno/config.hpp"
#include "zeno/error.hpp"
#include "zeno/report.hpp"

namespace {

struct Overrides {
    std::string config_path;
    std::map<std::string, double> numbers;
    std::map<std::string, long long> integers;
    std::optional<std::string> out;
    std::optional<std::string> axis;
    std::vector<double> grid;
};

void add_common_options(CLI::App& cmd, Overrides& o) {
    cmd.add_option("--config", o.config_path, "JSON scenario config");
    const std::vector<std::pair<std::string, std::string>> numeric{
        {"omega", "Rabi frequency, rad/ns"}, {"phi", "drive phase, rad"},     {"eta", "anharmonicity, rad/ns"},
        {"gamma", "tunneling rate, 1/ns"},   {"v", "two-level coupling"},     {"g", "XY coupling, rad/ns"},
        {"g_tilde", "ZZ coupling, rad/ns"},  {"dt", "measurement interval, ns"}, {"t_total", "total time, ns"}};
    for (const auto& [key, help] : numeric) {
        std::string flag = "--" + key;
        for (auto& c : flag)
            if (c == '_') c = '-';
        cmd.add_option_function<double>(flag, [&o, key = key](double x) { o.numbers[key] = x; }, help);
    }
    const std::vector<std::pair<std::string, std::string>> integral{
        {"n", "measurement intervals"}, {"samples", "no-Zeno sampling intervals"},
        {"steps", "tunneling sub-steps"}, {"n_max", "n_crit search bound"}, {"seed", "RNG seed"}};
    for (const auto& [key, help] : integral) {
        std::string flag = "--" + key;
        for (auto& c : flag)
            if (c == '_') c = '-';
        cmd.add_option_function<long long>(flag, [&o, key = key](long long x) { o.integers[key] = x; }, help);
    }
    cmd.add_option_function<std::string>("--out", [&o](const std::string& s) { o.out = s; }, "output CSV path");
    cmd.add_option_function<std::string>("--axis", [&o](const std::string& s) { o.axis = s; }, "sweep axis");
    cmd.add_option("--grid", o.grid, "sweep grid values");
}

nlohmann::json assemble(const Overrides& o, const std::optional<std::string>& mode) {
    nlohmann::json doc = nlohmann::json::object();
    if (!o.config_path.empty()) doc = zeno::read_config_file(o.config_path);
    if (!doc.is_object()) throw zeno::ConfigError("config must be a JSON object");
    if (mode) {
        if (doc.contains("mode") && doc["mode"] != *mode)
            throw zeno::ConfigError("config mode '" + doc["mode"].dump() + "' conflicts with subcommand '" + *mode + "'");
        doc["mode"] = *mode;
    }
    for (const auto& [k, v] : o.numbers) doc[k] = v;
    for (const auto& [k, v] : o.integers) doc[k] = v;
    if (o.out) doc["output"] = *o.out;
    if (o.axis) doc["axis"] = *o.axis;
    if (!o.grid.empty()) doc["grid"] = o.grid;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Zeno leakage-suppression simulator"};
    app.require_subcommand(1);

    Overrides overrides;
    std::optional<std::string> chosen_mode;

    auto* run = app.add_subcommand("run", "run the scenario described by --config (mode taken from the file)");
    add_common_options(*run, overrides);
    run->callback([&] {
        if (overrides.config_path.empty()) throw CLI::ValidationError("run needs --config");
    });

    for (const auto& name : zeno::all_mode_names()) {
        auto* cmd = app.add_subcommand(name, "run a " + name + " scenario");
        add_common_options(*cmd, overrides);
        cmd->callback([&chosen_mode, name] { chosen_mode = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(zeno::ExitCode::ConfigError);
    }

    zeno::ScenarioOutcome outcome;
    try {
        outcome = zeno::run_scenario(assemble(overrides, chosen_mode));
    } catch (const zeno::ConfigError& e) {
        outcome = {zeno::ExitCode::ConfigError, {}, std::string("config error: ") + e.what()};
    }

    if (outcome.code != zeno::ExitCode::Success) {
        std::cerr << "zeno: " << outcome.error << '\n';
        return static_cast<int>(outcome.code);
    }
    std::cout << outcome.summary << '\n';
    return 0;
}
