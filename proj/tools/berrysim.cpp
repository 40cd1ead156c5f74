#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "berry/config.hpp"
#include "berry/runner.hpp"
#include "berry/verify.hpp"

namespace {

struct FlagState {
    std::string config_path;
    std::string state = "+1";
    std::string axis;
    std::string grid;
    std::string format = "csv";
    std::string inject = "none";
};

// Shared physics/simulation/output flags; every flag mirrors a config-file
// key and overrides it.
void add_common_flags(CLI::App* cmd, berry::RunConfig& cfg, FlagState& flags)
{
    cmd->add_option("--config", flags.config_path, "key = value config file");
    cmd->add_option("--e1", cfg.e1, "unperturbed level splitting E1 (a.u.)");
    cmd->add_option("--d", cfg.d, "dipole matrix element d (a.u.)");
    cmd->add_option("--efield", cfg.efield, "field magnitude (a.u.)");
    cmd->add_option("--theta", cfg.theta, "field tilt angle (rad, in [0, pi])");
    cmd->add_option("--omega", cfg.omega, "azimuthal angular velocity (rad/time)");
    cmd->add_option("--phi0", cfg.phi0, "initial azimuth (rad)");
    cmd->add_option("--periods", cfg.periods, "number of field revolutions");
    cmd->add_option("--steps", cfg.steps, "integration steps per period");
    cmd->add_option("--stride", cfg.stride, "trajectory recording stride");
    cmd->add_option("--state", flags.state, "eigenstate to follow: +1, 0, -1, 00");
    cmd->add_option("--out", cfg.output_path, "output path (default stdout)");
    cmd->add_option("--format", flags.format, "output format: csv or json");
    cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
    cmd->add_option("--tolerance-scale", cfg.tolerance_scale,
                    "multiplier applied to verify tolerances");
}

std::map<std::string, bool> flag_presence(const CLI::App* cmd)
{
    std::map<std::string, bool> present;
    for (const auto* opt : cmd->get_options()) {
        std::string name = opt->get_lnames().empty() ? "" : opt->get_lnames().front();
        if (!name.empty()) present[name] = opt->count() > 0;
    }
    return present;
}

void finalize(berry::RunConfig& cfg, const CLI::App* cmd, const FlagState& flags)
{
    if (!flags.config_path.empty()) {
        const auto kv = berry::read_config_file(flags.config_path);
        berry::apply_config_file(cfg, kv, flag_presence(cmd));
    }
    // string-valued flags win over whatever the file set
    const auto present = flag_presence(cmd);
    if (present.at("state")) cfg.state = berry::parse_state_label(flags.state);
    if (present.at("format")) cfg.format = berry::parse_format(flags.format);
    if (present.count("axis") && present.at("axis") && !flags.axis.empty())
        cfg.axis = berry::parse_axis(flags.axis);
    if (present.count("grid") && present.at("grid") && !flags.grid.empty())
        cfg.grid = berry::parse_grid(flags.grid);
    cfg.validate();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spin-one Berry phase simulator: propagates a four-state system in a "
                 "rotating electric field and extracts the geometric phase"};
    app.require_subcommand(1);
    app.set_version_flag("--version", berry::kVersion);

    berry::RunConfig cfg;
    FlagState flags;

    auto* sim_cmd = app.add_subcommand("simulate", "run one propagation and report phases");
    add_common_flags(sim_cmd, cfg, flags);

    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
    add_common_flags(sweep_cmd, cfg, flags);
    sweep_cmd->add_option("--axis", flags.axis, "sweep axis: omega, theta or steps");
    sweep_cmd->add_option("--grid", flags.grid, "grid spec min:max:count:{log|lin}");

    auto* verify_cmd = app.add_subcommand("verify", "run the identity and consistency suite");
    add_common_flags(verify_cmd, cfg, flags);
    verify_cmd->add_option("--inject", flags.inject,
                           "test fixture: none or j1-sign-flip");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim_cmd->parsed()) {
            cfg.mode = berry::RunMode::simulate;
            finalize(cfg, sim_cmd, flags);
            return berry::run_simulate(cfg);
        }
        if (sweep_cmd->parsed()) {
            cfg.mode = berry::RunMode::sweep;
            finalize(cfg, sweep_cmd, flags);
            return berry::run_sweep(cfg);
        }
        cfg.mode = berry::RunMode::verify;
        if (flags.inject == "j1-sign-flip")
            cfg.inject = berry::InjectedFault::j1_sign_flip;
        else if (flags.inject != "none")
            throw std::invalid_argument("--inject must be none or j1-sign-flip");
        finalize(cfg, verify_cmd, flags);
        return berry::run_verify(cfg, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const berry::AliasingError& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 2;
    } catch (const berry::IntegrationError& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
