#include "berry/runner.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace berry {

namespace {

std::string fmt_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Honors SOURCE_DATE_EPOCH so sweep outputs are reproducible byte for byte.
std::string run_timestamp()
{
    std::time_t t;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    else
        t = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::ordered_json report_json(const PhaseReport& r)
{
    return nlohmann::ordered_json{{"total_phase", r.total_phase},
                                  {"dynamic_phase", r.dynamic_phase},
                                  {"geometric_phase", r.geometric_phase},
                                  {"predicted_geometric", r.predicted_geometric},
                                  {"solid_angle", r.solid_angle},
                                  {"leakage", r.leakage},
                                  {"final_norm_defect", r.final_norm_defect}};
}

const char* kCsvHeader =
    "axis_value,total_phase,dynamic_phase,geometric_phase,predicted_geometric,"
    "solid_angle,leakage,norm_defect,status\n";

std::string csv_row(const std::string& axis_value, const PhaseReport& r,
                    const std::string& status)
{
    std::ostringstream out;
    out << axis_value << ',' << fmt_double(r.total_phase) << ','
        << fmt_double(r.dynamic_phase) << ',' << fmt_double(r.geometric_phase) << ','
        << fmt_double(r.predicted_geometric) << ',' << fmt_double(r.solid_angle) << ','
        << fmt_double(r.leakage) << ',' << fmt_double(r.final_norm_defect) << ','
        << status << '\n';
    return out.str();
}

int write_output(const RunConfig& cfg, const std::string& text)
{
    if (cfg.output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write to '" << cfg.output_path << "'\n";
        return 1;
    }
    out << text;
    return 0;
}

RunConfig with_axis_value(const RunConfig& base, SweepAxis axis, double value)
{
    RunConfig cfg = base;
    switch (axis) {
        case SweepAxis::omega: cfg.omega = value; break;
        case SweepAxis::theta: cfg.theta = value; break;
        case SweepAxis::steps: cfg.steps = static_cast<int>(std::lround(value)); break;
    }
    return cfg;
}

}  // namespace

PhaseReport simulate_once(const RunConfig& cfg)
{
    const LevelParams p = cfg.level_params();
    const FieldConfig f = cfg.field_config();
    const SimulationConfig sim = cfg.sim_config();
    const Trajectory traj = propagate(p, f, sim);
    PhaseReport report = extract_phases(traj, spectrum(p, f.e_mag), sim, f);
    report.leakage = leakage(traj, p, f, sim.state);
    return report;
}

SweepResult sweep(const RunConfig& cfg)
{
    const SweepAxis axis = *cfg.axis;
    const std::vector<double> values = cfg.grid.values();

    std::vector<std::future<SweepRow>> futures;
    futures.reserve(values.size());
    for (const double v : values) {
        futures.push_back(std::async(std::launch::async, [&cfg, axis, v] {
            SweepRow row;
            row.axis_value = v;
            try {
                row.report = simulate_once(with_axis_value(cfg, axis, v));
            } catch (const std::exception& e) {
                row.report = PhaseReport{};
                row.status = std::string("error: ") + e.what();
            }
            return row;
        }));
    }

    SweepResult result;
    result.axis_values = values;
    for (auto& fut : futures) result.rows.push_back(fut.get());
    result.metadata.timestamp = run_timestamp();
    result.metadata.version = kVersion;
    result.metadata.config_echo = config_echo(cfg);
    return result;
}

std::string format_csv(const SweepResult& result)
{
    std::string out = kCsvHeader;
    for (const auto& row : result.rows)
        out += csv_row(fmt_double(row.axis_value), row.report, row.status);
    return out;
}

std::string format_csv(const PhaseReport& report)
{
    return std::string(kCsvHeader) + csv_row("", report, "ok");
}

std::string format_json(const SweepResult& result)
{
    nlohmann::ordered_json j;
    j["axis_values"] = result.axis_values;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& row : result.rows) {
        auto entry = report_json(row.report);
        entry["axis_value"] = row.axis_value;
        entry["status"] = row.status;
        j["reports"].push_back(entry);
    }
    j["metadata"] = {{"timestamp", result.metadata.timestamp},
                     {"version", result.metadata.version},
                     {"config", result.metadata.config_echo}};
    return j.dump(2) + "\n";
}

std::string format_json(const PhaseReport& report)
{
    return report_json(report).dump(2) + "\n";
}

int run_simulate(const RunConfig& cfg)
{
    PhaseReport report;
    try {
        report = simulate_once(cfg);
    } catch (const AliasingError& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 2;
    } catch (const IntegrationError& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 2;
    }
    const std::string text = cfg.format == OutputFormat::csv ? format_csv(report)
                                                             : format_json(report);
    return write_output(cfg, text);
}

int run_sweep(const RunConfig& cfg)
{
    const SweepResult result = sweep(cfg);
    const std::string text = cfg.format == OutputFormat::csv ? format_csv(result)
                                                             : format_json(result);
    return write_output(cfg, text);
}

std::map<std::string, std::string> config_echo(const RunConfig& cfg)
{
    std::map<std::string, std::string> echo;
    echo["physical.e1"] = fmt_double(cfg.e1);
    echo["physical.d"] = fmt_double(cfg.d);
    echo["physical.efield"] = fmt_double(cfg.efield);
    echo["physical.theta"] = fmt_double(cfg.theta);
    echo["physical.omega"] = fmt_double(cfg.omega);
    echo["physical.phi0"] = fmt_double(cfg.phi0);
    echo["sim.periods"] = std::to_string(cfg.periods);
    echo["sim.steps"] = std::to_string(cfg.steps);
    echo["sim.stride"] = std::to_string(cfg.stride);
    echo["sim.state"] = to_string(cfg.state);
    if (cfg.axis) {
        echo["sweep.axis"] = to_string(*cfg.axis);
        echo["sweep.grid"] = fmt_double(cfg.grid.min) + ":" + fmt_double(cfg.grid.max) +
                             ":" + std::to_string(cfg.grid.count) + ":" +
                             (cfg.grid.log_spacing ? "log" : "lin");
    }
    echo["output.format"] = to_string(cfg.format);
    echo["run.seed"] = std::to_string(cfg.seed);
    echo["run.tolerance_scale"] = fmt_double(cfg.tolerance_scale);
    return echo;
}

}  // namespace berry
