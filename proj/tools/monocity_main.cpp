// Command line front end: simulate, analytic, segradius, metrics, sweep.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monocity/analytic.hpp"
#include "monocity/config_io.hpp"
#include "monocity/csv.hpp"
#include "monocity/engine.hpp"
#include "monocity/metrics.hpp"
#include "monocity/scenarios.hpp"
#include "monocity/sim_io.hpp"

namespace fs = std::filesystem;
using namespace monocity;

namespace {

analytic::Params analytic_params(const SimulationConfig& config) {
    analytic::Params p;
    p.dwelling_density = config.dwellings_per_location / (config.spacing * config.spacing);
    p.arrivals = config.incomes.arrivals_per_step;
    p.sale_rate = config.sale_rate;
    p.markup = config.markup;
    p.seller_power = config.seller_power;
    p.ask_discount = config.ask_discount;
    p.revision_period = config.revision_period;
    p.income = config.incomes.income(1);
    p.attract = config.attractiveness_spec();
    return p;
}

void write_text_file(const fs::path& path, const std::string& contents) {
    write_file(path.string(), contents);
}

int run_simulate(const std::string& config_path, std::uint64_t seed, const std::string& out_dir) {
    const SimulationConfig config = load_config(config_path);
    fs::create_directories(out_dir);

    Simulation sim(config, seed);
    const SimulationRecord record = sim.run();
    const Summary summary = summarize(record, config.burn_in, config.window);

    std::ostringstream summary_csv, transactions_csv, prices_csv, occupancy_csv, grid_csv;
    write_summary_csv(summary_csv, summary, config.incomes.num_categories);
    write_transactions_csv(transactions_csv, record);
    write_prices_csv(prices_csv, record);
    write_occupancy_csv(occupancy_csv, sim);
    sim.grid().write_csv(grid_csv);

    const fs::path dir(out_dir);
    write_text_file(dir / "summary.csv", summary_csv.str());
    write_text_file(dir / "transactions.csv", transactions_csv.str());
    write_text_file(dir / "prices_by_step.csv", prices_csv.str());
    write_text_file(dir / "occupancy.csv", occupancy_csv.str());
    write_text_file(dir / "grid.csv", grid_csv.str());

    const auto price = metrics::global_mean_price(summary);
    std::cout << "simulated " << record.num_steps() << " steps, " << record.transactions.size()
              << " transactions, global mean price "
              << (price ? format_double(*price) : std::string("n/a")) << '\n';
    return 0;
}

int run_analytic(const std::string& config_path, double beta, int grid_points,
                 const std::string& out_path) {
    const SimulationConfig config = load_config(config_path);
    analytic::SolveOptions options;
    options.grid_points = grid_points;
    const auto curve = solve_price_curve(analytic_params(config), beta, options);
    if (!curve.converged)
        std::cerr << "warning: normalization iteration did not converge after " << curve.iterations
                  << " sweeps\n";
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    write_file(out_path, csv.str());
    std::cout << "wrote " << curve.radii.size() << " grid points, Z* = "
              << format_double(curve.normalization) << '\n';
    return 0;
}

int run_segradius(const std::string& config_path, const std::string& sweep_spec,
                  const std::string& out_path) {
    const SimulationConfig config = load_config(config_path);

    analytic::TwoCategoryParams two;
    two.base = analytic_params(config);
    two.income_gap = config.incomes.spread;
    two.rich_arrivals = load_rich_arrivals(config_path);

    std::string param;
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    {
        std::stringstream ss(sweep_spec);
        std::string item;
        std::vector<std::string> parts;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 4) throw std::runtime_error("--sweep expects param:lo:hi:steps");
        param = parts[0];
        lo = std::stod(parts[1]);
        hi = std::stod(parts[2]);
        steps = std::stoi(parts[3]);
        if (steps < 2) throw std::runtime_error("--sweep needs at least 2 steps");
    }

    auto apply = [&](double value) {
        analytic::TwoCategoryParams p = two;
        if (param == "R") p.base.attract.steepness = value;
        else if (param == "mu") p.base.markup = value;
        else if (param == "nu") p.base.seller_power = value;
        else if (param == "alpha") p.base.sale_rate = value;
        else if (param == "n") p.base.dwelling_density = value;
        else if (param == "gamma2") p.rich_arrivals = value;
        else if (param == "delta") p.income_gap = value;
        else if (param == "Y1") p.base.income = value;
        else if (param == "lambda") p.base.ask_discount = value;
        else if (param == "lambda_eff") { // sweep lambda^(1/tau) directly
            p.base.ask_discount = value;
            p.base.revision_period = 1;
        } else
            throw std::runtime_error("unknown sweep parameter: " + param);
        return p;
    };

    std::ostringstream csv;
    csv << "param_value,r_s\n";
    for (int i = 0; i < steps; ++i) {
        const double value = lo + (hi - lo) * i / (steps - 1);
        const auto result = analytic::segregation_radius(apply(value));
        csv << format_double(value) << ',' << format_double(result.radius) << '\n';
    }
    write_file(out_path, csv.str());
    std::cout << "wrote " << steps << " sweep points for " << param << '\n';
    return 0;
}

int run_metrics(const std::string& occupancy_path, const std::string& config_path,
                const std::string& out_path) {
    const SimulationConfig config = load_config(config_path);
    std::ifstream in(occupancy_path);
    if (!in) throw std::runtime_error("cannot open occupancy file: " + occupancy_path);

    const CityGrid grid(config.linear_size, config.spacing, config.attractiveness_spec());
    metrics::OccupancySnapshot snapshot;
    snapshot.num_locations = grid.num_locations();
    snapshot.num_categories = config.incomes.num_categories + 1;
    snapshot.counts.assign(
        static_cast<std::size_t>(snapshot.num_locations) * snapshot.num_categories, 0);

    std::string line;
    if (!std::getline(in, line) || line.rfind("x,y,r,category", 0) != 0)
        throw std::runtime_error("occupancy file must start with the x,y,r,category header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() < 4) throw std::runtime_error("bad occupancy row: " + line);
        const int x = std::stoi(fields[0]);
        const int y = std::stoi(fields[1]);
        const int category = std::stoi(fields[3]);
        if (category == kInitialOccupant) continue;
        if (category < 1 || category > snapshot.num_categories)
            throw std::runtime_error("occupancy row with unknown category: " + line);
        ++snapshot.counts[static_cast<std::size_t>(grid.index_of(x, y)) * snapshot.num_categories +
                          (category - 1)];
    }

    const double g = metrics::gini(config.incomes);
    const auto segregation = metrics::rank_order_index(snapshot);
    std::ostringstream csv;
    csv << "gini,HR\n"
        << format_double(g) << ','
        << (segregation ? format_double(segregation->index) : std::string("nan")) << '\n';
    if (!out_path.empty()) write_file(out_path, csv.str());
    std::cout << csv.str();
    return 0;
}

int run_sweep_cmd(const std::string& experiment, const std::string& config_path, int replications,
                  std::uint64_t seed, const std::string& out_dir, int jobs) {
    SimulationConfig base = config_path.empty() ? SimulationConfig{} : load_config(config_path);

    std::vector<scenarios::RunSpec> specs;
    if (experiment == "inequality")
        specs = scenarios::inequality_experiment(base, replications, seed);
    else if (experiment == "policy")
        specs = scenarios::policy_experiment(base, replications, seed);
    else if (experiment == "foreigners")
        specs = scenarios::foreign_influx_experiment(base, replications, seed);
    else
        throw std::runtime_error("unknown experiment: " + experiment);

    const auto results = scenarios::run_sweep(specs, jobs);
    fs::create_directories(out_dir);
    std::ostringstream csv;
    write_sweep_csv(csv, results);
    write_text_file(fs::path(out_dir) / "results.csv", csv.str());

    int failures = 0;
    for (const auto& row : results)
        if (!row.ok) {
            ++failures;
            std::cerr << "run failed (" << row.preset << '/' << row.policy << '/' << row.seed
                      << "): " << row.error << '\n';
        }
    std::cout << "completed " << results.size() - failures << '/' << results.size() << " runs\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monocentric housing market simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, out_path, sweep_spec, occupancy_path, experiment;
    std::uint64_t seed = 42;
    double beta = 0.5;
    int grid_points = 10000;
    int replications = 5;
    int jobs = 0;

    auto* simulate = app.add_subcommand("simulate", "run one simulation and write CSV outputs");
    simulate->add_option("--config", config_path, "config file")->required();
    simulate->add_option("--seed", seed, "random seed");
    simulate->add_option("--out", out_dir, "output directory")->required();

    auto* analytic_cmd = app.add_subcommand("analytic", "steady-state price curve");
    analytic_cmd->add_option("--config", config_path, "config file")->required();
    analytic_cmd->add_option("--beta", beta, "attractiveness weight")->required();
    analytic_cmd->add_option("--grid", grid_points, "radial grid points");
    analytic_cmd->add_option("--out", out_path, "output CSV")->required();

    auto* segradius = app.add_subcommand("segradius", "segregation radius sweep");
    segradius->add_option("--config", config_path, "config file")->required();
    segradius->add_option("--sweep", sweep_spec, "param:lo:hi:steps")->required();
    segradius->add_option("--out", out_path, "output CSV")->required();

    auto* metrics_cmd = app.add_subcommand("metrics", "gini and H^R from an occupancy CSV");
    metrics_cmd->add_option("--occupancy", occupancy_path, "occupancy snapshot CSV")->required();
    metrics_cmd->add_option("--config", config_path, "config file")->required();
    metrics_cmd->add_option("--out", out_path, "optional output CSV");

    auto* sweep = app.add_subcommand("sweep", "preset experiment sweeps");
    sweep->add_option("--experiment", experiment, "inequality | policy | foreigners")->required();
    sweep->add_option("--config", config_path, "base config file (default: baseline)");
    sweep->add_option("--replications", replications, "seeds per cell");
    sweep->add_option("--seed", seed, "base seed");
    sweep->add_option("--jobs", jobs, "worker threads (default: hardware)");
    sweep->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return run_simulate(config_path, seed, out_dir);
        if (analytic_cmd->parsed()) return run_analytic(config_path, beta, grid_points, out_path);
        if (segradius->parsed()) return run_segradius(config_path, sweep_spec, out_path);
        if (metrics_cmd->parsed()) return run_metrics(occupancy_path, config_path, out_path);
        if (sweep->parsed())
            return run_sweep_cmd(experiment, config_path, replications, seed, out_dir, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
