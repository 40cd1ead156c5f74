#include "berry/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace berry {

std::vector<double> GridSpec::values() const
{
    if (count < 2)
        throw std::invalid_argument("grid: count must be >= 2");
    if (log_spacing && (min <= 0.0 || max <= 0.0))
        throw std::invalid_argument("grid: log spacing requires positive endpoints");
    std::vector<double> v(count);
    for (int k = 0; k < count; ++k) {
        const double frac = static_cast<double>(k) / (count - 1);
        v[k] = log_spacing ? std::exp(std::log(min) + frac * (std::log(max) - std::log(min)))
                           : min + frac * (max - min);
    }
    return v;
}

SimulationConfig RunConfig::sim_config() const
{
    SimulationConfig sim;
    sim.periods = periods;
    sim.steps_per_period = steps;
    sim.record_stride = stride;
    sim.state = state;
    sim.validate();
    return sim;
}

void RunConfig::validate() const
{
    level_params();
    field_config();
    if (mode == RunMode::sweep) {
        if (!axis)
            throw std::invalid_argument("sweep mode requires an axis (--axis)");
        grid.values();  // range-checks the grid
        if (*axis == SweepAxis::steps) {
            if (grid.min < 100)
                throw std::invalid_argument("grid: steps axis requires min >= 100");
        } else if (grid.min < 0.0 && *axis == SweepAxis::theta) {
            throw std::invalid_argument("grid: theta axis requires values in [0, pi]");
        }
    }
    if (mode != RunMode::sweep) sim_config();
    if (!(tolerance_scale > 0.0))
        throw std::invalid_argument("tolerance_scale must be positive");
}

std::map<std::string, std::string> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        if (strip(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": empty key or value");
        kv[key] = value;
    }
    return kv;
}

namespace {

double to_double(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': '" + value +
                                    "' is not a number");
    }
    if (used != value.size())
        throw std::invalid_argument("config key '" + key + "': '" + value +
                                    "' is not a number");
    return x;
}

int to_int(const std::string& key, const std::string& value)
{
    const double x = to_double(key, value);
    if (x != std::floor(x))
        throw std::invalid_argument("config key '" + key + "': expected an integer");
    return static_cast<int>(x);
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::map<std::string, std::string>& kv,
                       const std::map<std::string, bool>& overridden)
{
    const auto pinned = [&](const std::string& flag) {
        const auto it = overridden.find(flag);
        return it != overridden.end() && it->second;
    };
    for (const auto& [key, value] : kv) {
        if (key == "physical.e1") {
            if (!pinned("e1")) cfg.e1 = to_double(key, value);
        } else if (key == "physical.d") {
            if (!pinned("d")) cfg.d = to_double(key, value);
        } else if (key == "physical.efield") {
            if (!pinned("efield")) cfg.efield = to_double(key, value);
        } else if (key == "physical.theta") {
            if (!pinned("theta")) cfg.theta = to_double(key, value);
        } else if (key == "physical.omega") {
            if (!pinned("omega")) cfg.omega = to_double(key, value);
        } else if (key == "physical.phi0") {
            if (!pinned("phi0")) cfg.phi0 = to_double(key, value);
        } else if (key == "sim.periods") {
            if (!pinned("periods")) cfg.periods = to_int(key, value);
        } else if (key == "sim.steps") {
            if (!pinned("steps")) cfg.steps = to_int(key, value);
        } else if (key == "sim.stride") {
            if (!pinned("stride")) cfg.stride = to_int(key, value);
        } else if (key == "sim.state") {
            if (!pinned("state")) cfg.state = parse_state_label(value);
        } else if (key == "sweep.axis") {
            if (!pinned("axis")) cfg.axis = parse_axis(value);
        } else if (key == "sweep.grid") {
            if (!pinned("grid")) cfg.grid = parse_grid(value);
        } else if (key == "output.path") {
            if (!pinned("out")) cfg.output_path = value;
        } else if (key == "output.format") {
            if (!pinned("format")) cfg.format = parse_format(value);
        } else if (key == "run.seed") {
            if (!pinned("seed")) cfg.seed = static_cast<unsigned long>(to_int(key, value));
        } else if (key == "run.tolerance_scale") {
            if (!pinned("tolerance-scale")) cfg.tolerance_scale = to_double(key, value);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

GridSpec parse_grid(const std::string& text)
{
    // min:max:count:{log|lin}
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4)
        throw std::invalid_argument("grid '" + text +
                                    "': expected min:max:count:{log|lin}");
    GridSpec g;
    g.min = to_double("grid.min", parts[0]);
    g.max = to_double("grid.max", parts[1]);
    g.count = to_int("grid.count", parts[2]);
    if (parts[3] == "log")
        g.log_spacing = true;
    else if (parts[3] == "lin")
        g.log_spacing = false;
    else
        throw std::invalid_argument("grid '" + text + "': spacing must be log or lin");
    g.values();
    return g;
}

SweepAxis parse_axis(const std::string& text)
{
    if (text == "omega") return SweepAxis::omega;
    if (text == "theta") return SweepAxis::theta;
    if (text == "steps") return SweepAxis::steps;
    throw std::invalid_argument("axis must be one of omega, theta, steps (got '" +
                                text + "')");
}

OutputFormat parse_format(const std::string& text)
{
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw std::invalid_argument("format must be csv or json (got '" + text + "')");
}

std::string to_string(SweepAxis a)
{
    switch (a) {
        case SweepAxis::omega: return "omega";
        case SweepAxis::theta: return "theta";
        default: return "steps";
    }
}

std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

}  // namespace berry
