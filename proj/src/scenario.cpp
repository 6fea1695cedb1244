#include <sstream>

#include "zeno/error.hpp"
#include "zeno/models.hpp"
#include "zeno/report.hpp"

namespace zeno {

namespace {

std::string header(const ScenarioConfig& config) { return "mode=" + std::string(to_string(config.mode)); }

ComplexMatrix three_level(const ModelSpec& m) { return build_three_level(m.omega, m.phi, m.eta); }

std::string ghz_state_csv(const QuantumState& psi) {
    std::string out = "basis,re,im,p\n";
    for (std::size_t k = 0; k < psi.dim(); ++k) {
        std::string bits;
        for (int q = 2; q >= 0; --q) bits += ((k >> q) & 1) ? '1' : '0';
        out += bits + ',' + format_double(psi[k].real()) + ',' + format_double(psi[k].imag()) + ',' +
               format_double(std::norm(psi[k])) + '\n';
    }
    return out;
}

void maybe_write(const ScenarioConfig& config, const std::string& content) {
    if (!config.output_path.empty()) write_file_atomically(config.output_path, content);
}

}  // namespace

std::string execute_scenario(const ScenarioConfig& config) {
    const auto& m = config.model;
    std::ostringstream summary;
    summary << header(config);

    switch (config.mode) {
        case Mode::TwoLevelZeno: {
            const auto schedule = config.schedule();
            const auto run = run_zeno(build_two_level(m.v), QuantumState::basis(2, 0), schedule);
            maybe_write(config, format_trace_csv(run.trace));
            summary << " T=" << format_double(schedule.total_time()) << " n=" << schedule.n
                    << " W=" << format_double(*run.survival.w_zeno) << " closed_form="
                    << format_double(two_level_survival_closed_form(m.v, schedule.total_time(), schedule.n));
            break;
        }
        case Mode::ThreeLevelZeno: {
            const auto schedule = config.schedule();
            const auto run = run_zeno(three_level(m), QuantumState::basis(3, 0), schedule);
            maybe_write(config, format_trace_csv(run.trace));
            summary << " T=" << format_double(schedule.total_time()) << " n=" << schedule.n
                    << " W=" << format_double(*run.survival.w_zeno);
            break;
        }
        case Mode::NoZeno: {
            const double t = config.total_time();
            const auto trace = run_unitary(three_level(m), QuantumState::basis(3, 0), t, config.samples);
            maybe_write(config, format_trace_csv(trace));
            summary << " T=" << format_double(t) << " W=" << format_double(trace.back().survival);
            break;
        }
        case Mode::Tunneling: {
            const double t = config.total_time();
            const auto run =
                run_tunneling(build_tunneling(m.omega, m.eta, m.gamma), QuantumState::basis(3, 0), t, config.steps);
            maybe_write(config, format_trace_csv(run.trace));
            summary << " T=" << format_double(t) << " W=" << format_double(*run.survival.w_tunnel)
                    << " max_p3=" << format_double(run.peak_leak);
            break;
        }
        case Mode::Ghz: {
            const auto result = run_ghz_protocol(m.g, m.g_tilde);
            maybe_write(config, ghz_state_csv(result.state));
            summary << " T=" << format_double(result.entangling_time)
                    << " fidelity=" << format_double(result.diagnostics.fidelity)
                    << " uniformity_after_y=" << format_double(ghz_fidelity(result.after_rotation).uniformity_deviation)
                    << " global_phase=" << format_double(result.diagnostics.global_phase);
            break;
        }
        case Mode::Sweep: {
            const auto result = sweep(config);
            maybe_write(config, format_sweep_csv(result));
            const auto& last = result.points.back().record;
            summary << " axis=" << result.axis << " points=" << result.points.size()
                    << " W=" << format_double(*last.w_zeno);
            break;
        }
        case Mode::NCrit: {
            const double t = config.total_time();
            const auto h = three_level(m);
            const auto n_crit = find_n_crit(h, t, config.n_max);
            const double baseline = no_zeno_survival(h, t);
            if (!config.output_path.empty()) {
                std::string csv = "n,w_zeno,w_no_zeno\n";
                const int last = n_crit.value_or(config.n_max);
                for (int n = 1; n <= last; ++n)
                    csv += std::to_string(n) + ',' + format_double(zeno_survival(h, t, n)) + ',' +
                           format_double(baseline) + '\n';
                write_file_atomically(config.output_path, csv);
            }
            summary << " T=" << format_double(t) << " baseline=" << format_double(baseline);
            if (n_crit)
                summary << " n_crit=" << *n_crit << " W=" << format_double(zeno_survival(h, t, *n_crit));
            else
                summary << " n_crit=none n_max=" << config.n_max;
            break;
        }
    }
    return summary.str();
}

ScenarioOutcome run_scenario(const nlohmann::json& doc) {
    ScenarioOutcome outcome;
    try {
        const auto config = parse_config(doc);
        outcome.summary = execute_scenario(config);
    } catch (const ConfigError& e) {
        outcome = {ExitCode::ConfigError, {}, std::string("config error: ") + e.what()};
    } catch (const InvalidInput& e) {
        outcome = {ExitCode::ConfigError, {}, std::string("invalid input: ") + e.what()};
    } catch (const IoError& e) {
        outcome = {ExitCode::IoError, {}, std::string("i/o error: ") + e.what()};
    } catch (const PhysicsError& e) {
        outcome = {ExitCode::RuntimeError, {}, std::string("physics error: ") + e.what()};
    } catch (const std::exception& e) {
        outcome = {ExitCode::RuntimeError, {}, std::string("error: ") + e.what()};
    }
    return outcome;
}

ScenarioOutcome run_scenario(const std::filesystem::path& config_path) {
    try {
        return run_scenario(read_config_file(config_path));
    } catch (const ConfigError& e) {
        return {ExitCode::ConfigError, {}, std::string("config error: ") + e.what()};
    }
}

}  // namespace zeno
