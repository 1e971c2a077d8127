#include "eebandit/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "eebandit/errors.hpp"
#include "eebandit/units.hpp"

namespace eebandit {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& raw, const std::string& key)
{
    const std::string text = trim(raw);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError("config: malformed number for '" + key + "': '" + raw + "'");
    }
    return value;
}

std::size_t parse_count(const std::string& raw, const std::string& key)
{
    const std::string text = trim(raw);
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError("config: malformed integer for '" + key + "': '" + raw + "'");
    }
    return value;
}

} // namespace

std::vector<double> parse_double_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double(item, "list"));
    }
    if (out.empty()) {
        throw ConfigError("config: empty list");
    }
    return out;
}

ParamOverrides parse_config(std::istream& in)
{
    ParamOverrides o;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "k") {
            o.k = parse_count(value, key);
        } else if (key == "r0") {
            o.r0 = parse_double(value, key);
        } else if (key == "alpha") {
            o.alpha = parse_double(value, key);
        } else if (key == "lambda") {
            o.lambda = parse_double(value, key);
        } else if (key == "p_min_dbm") {
            o.p_min_dbm = parse_double(value, key);
        } else if (key == "b_max_dbm") {
            o.b_max_dbm = parse_double(value, key);
        } else if (key == "bandwidth_hz") {
            o.bandwidth_hz = parse_double(value, key);
        } else if (key == "noise_density_dbm_hz") {
            o.noise_density_dbm_hz = parse_double(value, key);
        } else if (key == "gamma") {
            o.gamma = parse_double(value, key);
        } else if (key == "powers_dbm") {
            o.powers_dbm = parse_double_list(value);
        } else if (key == "weights") {
            o.weights = (value == "uniform") ? std::vector<double>{} : parse_double_list(value);
        } else {
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return o;
}

ParamOverrides load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_config(in);
}

SystemParams make_params(const ParamOverrides& o, std::optional<std::size_t> k_override)
{
    const std::size_t k = k_override.value_or(o.k.value_or(5));
    SystemParams p = default_params(k);

    if (o.r0) p.r0 = *o.r0;
    if (o.alpha) p.alpha = *o.alpha;
    if (o.lambda) p.lambda_eff = *o.lambda;
    if (o.p_min_dbm) p.p_min = dbm_to_watt(*o.p_min_dbm);
    if (o.b_max_dbm) p.b_max = dbm_to_watt(*o.b_max_dbm);
    if (o.gamma) p.path_loss_exp = *o.gamma;
    if (o.bandwidth_hz) p.bandwidth = *o.bandwidth_hz;
    if (o.noise_density_dbm_hz) p.noise_density = dbm_to_watt(*o.noise_density_dbm_hz);
    p.noise_power = p.bandwidth * p.noise_density;

    if (o.powers_dbm) {
        p.powers.clear();
        for (double dbm : *o.powers_dbm) {
            p.powers.push_back(dbm_to_watt(dbm));
        }
    }
    if (o.weights && !o.weights->empty()) {
        if (o.weights->size() != k) {
            throw ConfigError("config: weights list length does not match k");
        }
        p.weights = *o.weights;
    }
    validate(p);
    return p;
}

} // namespace eebandit
