#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zeno/config.hpp"
#include "zeno/engine.hpp"
#include "zeno/ghz.hpp"

namespace zeno {

// ---- CSV ------------------------------------------------------------------

/// Trace as text: header `t,p1,p2,p3,W`, one LF-terminated row per sample,
/// values with 17 significant digits. Two-level traces get p3 = 0.
std::string format_trace_csv(const SimulationTrace& trace);

/// Writes format_trace_csv to `path` through a temporary file, so a failed
/// write leaves no partial output. Throws IoError naming the path.
void emit_trace_csv(const SimulationTrace& trace, const std::filesystem::path& path);

/// Inverse of format_trace_csv (populations come back three-wide).
SimulationTrace parse_trace_csv(const std::string& text);
SimulationTrace read_trace_csv(const std::filesystem::path& path);

/// Writes `content` to `path` via `path.tmp` and a rename.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

/// %.17g
std::string format_double(double x);

// ---- Sweeps ---------------------------------------------------------------

struct SweepPoint {
    double axis_value = 0.0;
    SurvivalRecord record;
    std::optional<double> tunnel_peak_leak;  ///< max_t p3(t) of the tunneling run, when computed
};

struct SweepResult {
    std::string axis;
    std::vector<SweepPoint> points;
};

/// One engine run per grid point for the Y-driven three-level qubit starting in
/// |1>: w_zeno from run_zeno, w_no_zeno = 1 - p3(T) from run_unitary, and
/// w_tunnel from run_tunneling when gamma is given or swept. Grid points run in
/// parallel on up to `threads` workers (0 = hardware concurrency); results keep
/// grid order.
SweepResult sweep(const ScenarioConfig& config, unsigned threads = 0);

/// Header `axis_value,w_zeno,w_no_zeno,w_tunnel`; undefined fields are empty.
std::string format_sweep_csv(const SweepResult& result);

// ---- Critical measurement number ------------------------------------------

/// Zeno survival W^(n) over total time T for the three-level Hamiltonian `h`
/// starting in |1>.
double zeno_survival(const ComplexMatrix& h, double t_total, int n);

/// Single-measurement survival 1 - p3(T) after exact evolution from |1>.
double no_zeno_survival(const ComplexMatrix& h, double t_total);

/// Smallest n in [1, n_max] whose Zeno survival exceeds the no-Zeno baseline
/// by more than 1e-12, or reaches 1 within 1e-12 (nothing can exceed perfect
/// survival). A single measurement at T is the baseline experiment itself, so
/// n = 1 only qualifies in the leak-free case. Linear scan: W^(n) is not monotone at
/// small n.
std::optional<int> find_n_crit(const ComplexMatrix& h, double t_total, int n_max);
std::optional<int> find_n_crit(const ModelSpec& model, double t_total, int n_max);

// ---- Scenario dispatch ----------------------------------------------------

/// Exit codes for the CLI.
enum class ExitCode : int { Success = 0, ConfigError = 1, RuntimeError = 2, IoError = 3 };

struct ScenarioOutcome {
    ExitCode code = ExitCode::Success;
    std::string summary;  ///< one line for stdout on success
    std::string error;    ///< one diagnostic line on failure
};

/// Runs a validated config: computes, writes the output file if configured and
/// builds the summary line. Throws on failure.
std::string execute_scenario(const ScenarioConfig& config);

/// Parses, validates and runs; never throws. Errors map to exit codes 1 (config),
/// 2 (physics/runtime) and 3 (I/O).
ScenarioOutcome run_scenario(const nlohmann::json& doc);
ScenarioOutcome run_scenario(const std::filesystem::path& config_path);

}  // namespace zeno
