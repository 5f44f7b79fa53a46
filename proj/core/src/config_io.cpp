#include "monocity/config_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace monocity {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::map<std::string, std::string> read_pairs(std::istream& in) {
    std::map<std::string, std::string> pairs;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": expected key = value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": empty key or value");
        if (!pairs.emplace(key, value).second)
            throw std::invalid_argument("config: duplicate key '" + key + "'");
    }
    return pairs;
}

double parse_number(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    }
    if (consumed != value.size())
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw std::invalid_argument("config: expected integer for '" + key + "': " + value);
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "on" || value == "1") return true;
    if (value == "false" || value == "off" || value == "0") return false;
    throw std::invalid_argument("config: expected boolean for '" + key + "': " + value);
}

std::vector<double> parse_array(const std::string& key, const std::string& value) {
    if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw std::invalid_argument("config: expected [a, b, ...] for '" + key + "'");
    std::vector<double> items;
    std::string body = value.substr(1, value.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (t.empty())
            throw std::invalid_argument("config: empty array element in '" + key + "'");
        items.push_back(parse_number(key, t));
    }
    if (items.empty()) throw std::invalid_argument("config: empty array for '" + key + "'");
    return items;
}

} // namespace

SimulationConfig parse_config(std::istream& in) {
    const auto pairs = read_pairs(in);
    SimulationConfig config;
    bool shares_set = false;
    bool policy_set = false;

    for (const auto& [key, value] : pairs) {
        if (key == "L") config.linear_size = parse_int(key, value);
        else if (key == "a") config.spacing = parse_number(key, value);
        else if (key == "R") config.attractiveness_steepness = parse_number(key, value);
        else if (key == "cutoff") config.attractiveness_cutoff = parse_bool(key, value);
        else if (key == "N") config.dwellings_per_location = parse_int(key, value);
        else if (key == "K") config.incomes.num_categories = parse_int(key, value);
        else if (key == "Y1") config.incomes.base_income = parse_number(key, value);
        else if (key == "delta") config.incomes.spread = parse_number(key, value);
        else if (key == "gamma_total") config.incomes.arrivals_per_step = parse_int(key, value);
        else if (key == "shares") { config.incomes.shares = parse_array(key, value); shares_set = true; }
        else if (key == "beta") config.utility_attractiveness_weight = parse_number(key, value);
        else if (key == "zeta") config.bid_multiplier = parse_number(key, value);
        else if (key == "xi") { config.policy.rates = parse_array(key, value); policy_set = true; }
        else if (key == "alpha") config.sale_rate = parse_number(key, value);
        else if (key == "mu") config.markup = parse_number(key, value);
        else if (key == "lambda") config.ask_discount = parse_number(key, value);
        else if (key == "tau") config.revision_period = parse_int(key, value);
        else if (key == "nu") config.seller_power = parse_number(key, value);
        else if (key == "clearing_mode") {
            if (value == "batch") config.clearing_mode = ClearingMode::Batch;
            else if (value == "arrival") config.clearing_mode = ClearingMode::Arrival;
            else throw std::invalid_argument("config: clearing_mode must be batch or arrival");
        }
        else if (key == "strict_crossing") config.strict_crossing = parse_bool(key, value);
        else if (key == "foreigners") config.foreign_influx = parse_bool(key, value);
        else if (key == "foreigners_taxed") config.foreign_buyers_taxed = parse_bool(key, value);
        else if (key == "horizon") config.horizon = parse_int(key, value);
        else if (key == "burn_in") config.burn_in = parse_int(key, value);
        else if (key == "window") config.window = parse_int(key, value);
        else if (key == "initial_price") config.initial_price = parse_number(key, value);
        else if (key == "seed_occupants") config.seed_initial_occupants = parse_bool(key, value);
        else if (key == "gamma2") continue; // analytic-only knob, see config_rich_arrivals
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }

    // Sizes default with K: the standard arrival shares for K = 10, uniform
    // otherwise; policy defaults to no taxes or subsidies.
    if (!shares_set) {
        if (config.incomes.num_categories == 10)
            config.incomes.shares = {0.25, 0.20, 0.15, 0.10, 0.08, 0.07, 0.06, 0.04, 0.03, 0.02};
        else
            config.incomes.shares.assign(config.incomes.num_categories,
                                         1.0 / config.incomes.num_categories);
    }
    if (!policy_set) config.policy = PolicyVector::none(config.incomes.num_categories);
    config.validate();
    return config;
}

SimulationConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in);
}

double config_rich_arrivals(std::istream& in) {
    const auto pairs = read_pairs(in);
    double gamma_total = 1000.0;
    if (const auto it = pairs.find("gamma_total"); it != pairs.end())
        gamma_total = parse_number(it->first, it->second);
    if (const auto it = pairs.find("gamma2"); it != pairs.end())
        return parse_number(it->first, it->second);
    return gamma_total / 2.0;
}

double load_rich_arrivals(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return config_rich_arrivals(in);
}

} // namespace monocity
