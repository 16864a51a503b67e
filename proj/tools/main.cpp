#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linebal/adjust.hpp"
#include "linebal/exact_solver.hpp"
#include "linebal/instance_io.hpp"
#include "linebal/model.hpp"
#include "linebal/moodie_young.hpp"
#include "linebal/num_text.hpp"
#include "linebal/precedence.hpp"
#include "linebal/simulation.hpp"
#include "linebal/stats.hpp"
#include "linebal/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;       // parse/validation/domain failures
constexpr int kExitInfeasible = 3;  // some task exceeds the cycle time
constexpr int kExitIo = 4;          // output file failures

struct CommonOptions {
    std::string instance_path;
    linebal::PercentileConfig percentiles;
    std::string method = "moodie-young";
    double cycle_per_unit = 0.0;
    double cycle_per_lot = 0.0;
    bool has_cycle_per_lot = false;
    int runs = 100;
    std::uint64_t seed = 1;
    int threads = 1;
    double grid_step = 0.05;
    std::string out_path;
    std::string format = "table";
};

void add_instance_option(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("instance", opt.instance_path, "Instance file (.alb)")
        ->required()
        ->check(CLI::ExistingFile);
}

void add_percentile_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--p1", opt.percentiles.p1,
                    "Percentile for processing-time variation, in (0,1)")
        ->capture_default_str();
    cmd->add_option("--p2", opt.percentiles.p2, "Percentile for defect counts, in [0,1)")
        ->capture_default_str();
}

void add_method_option(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--method", opt.method, "Balancing method")
        ->check(CLI::IsMember({"moodie-young", "ilp"}))
        ->capture_default_str();
}

void add_cycle_options(CLI::App* cmd, CommonOptions& opt) {
    auto* group = cmd->add_option_group("cycle", "Cycle time (exactly one)");
    group->add_option("--cycle-per-unit", opt.cycle_per_unit, "Cycle time per unit, minutes");
    group->add_option("--cycle-per-lot", opt.cycle_per_lot,
                      "Cycle time per lot, minutes (divided by the lot size)");
    group->require_option(1);
}

void add_format_option(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "csv"}))
        ->capture_default_str();
}

linebal::BalanceMethod method_of(const CommonOptions& opt) {
    return opt.method == "ilp" ? linebal::BalanceMethod::exact
                               : linebal::BalanceMethod::moodie_young;
}

double cycle_per_unit_of(const CommonOptions& opt, const linebal::Instance& instance) {
    if (opt.has_cycle_per_lot) {
        return opt.cycle_per_lot / instance.lot_size;
    }
    return opt.cycle_per_unit;
}

int capacity_lower_bound(const linebal::AdjustedTimes& times, double cycle) {
    return static_cast<int>(std::ceil(times.total() / cycle - 1e-9));
}

std::string station_tasks_text(const std::vector<int>& tasks) {
    std::string out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (i > 0) out += "→";
        out += std::to_string(tasks[i]);
    }
    return out;
}

void print_stations(std::ostream& out, const linebal::LineBalance& balance) {
    out << "stations: " << balance.stations.size() << "\n";
    for (std::size_t s = 0; s < balance.stations.size(); ++s) {
        const double idle = balance.cycle_time_per_unit - balance.loads[s];
        out << "WS" << (s + 1) << ": " << station_tasks_text(balance.stations[s]) << "  (load "
            << linebal::fixed_text(balance.loads[s], 2) << ", idle "
            << linebal::fixed_text(idle, 2) << ")\n";
    }
}

int run_adjust(const CommonOptions& opt) {
    const linebal::Instance instance = linebal::load_instance(opt.instance_path);
    const linebal::AdjustedTimes times = linebal::adjust_instance(instance, opt.percentiles);

    std::ostringstream out;
    if (opt.format == "csv") {
        out << "task,base,defects,rework,adjusted\n";
        for (const auto& t : times.tasks) {
            out << t.id << "," << linebal::double_text(t.base) << "," << t.defect_count << ","
                << linebal::double_text(t.rework) << "," << linebal::double_text(t.adjusted)
                << "\n";
        }
    } else {
        out << "name: " << instance.name << "\n";
        out << "lot size: " << instance.lot_size << "\n";
        out << "p1: " << linebal::double_text(opt.percentiles.p1)
            << "  p2: " << linebal::double_text(opt.percentiles.p2) << "\n\n";
        out << std::setw(4) << "task" << std::setw(9) << "base" << std::setw(9) << "defects"
            << std::setw(9) << "rework" << std::setw(10) << "adjusted" << "\n";
        for (const auto& t : times.tasks) {
            out << std::setw(4) << t.id << std::setw(9) << linebal::fixed_text(t.base, 2)
                << std::setw(9) << t.defect_count << std::setw(9)
                << linebal::fixed_text(t.rework, 2) << std::setw(10)
                << linebal::fixed_text(t.adjusted, 2) << "\n";
        }
        out << "\ntotal adjusted time per unit: " << linebal::fixed_text(times.total(), 2)
            << " min\n";
    }
    std::cout << out.str();
    return kExitOk;
}

int run_balance(const CommonOptions& opt) {
    const linebal::Instance instance = linebal::load_instance(opt.instance_path);
    const linebal::AdjustedTimes times = linebal::adjust_instance(instance, opt.percentiles);
    const double cycle = cycle_per_unit_of(opt, instance);

    std::ostringstream out;
    out << "name: " << instance.name << "\n";
    out << "method: " << opt.method << "\n";
    out << "cycle time per unit: " << linebal::double_text(cycle) << " min\n";
    out << "p1: " << linebal::double_text(opt.percentiles.p1)
        << "  p2: " << linebal::double_text(opt.percentiles.p2) << "\n";
    out << "lower bound: " << capacity_lower_bound(times, cycle) << "\n";

    if (method_of(opt) == linebal::BalanceMethod::exact) {
        const linebal::ExactResult result = linebal::solve_exact(instance, times, cycle);
        out << "proven optimal: " << (result.optimal ? "yes" : "no (search budget exhausted)")
            << "\n";
        print_stations(out, result.balance);
    } else {
        print_stations(out, linebal::moodie_young(instance, times, cycle));
    }
    std::cout << out.str();
    return kExitOk;
}

int run_simulate(const CommonOptions& opt) {
    const linebal::Instance instance = linebal::load_instance(opt.instance_path);
    const linebal::AdjustedTimes times = linebal::adjust_instance(instance, opt.percentiles);
    const double cycle = cycle_per_unit_of(opt, instance);
    const linebal::LineBalance balance = linebal::balance_with(method_of(opt), instance, times,
                                                               cycle);

    linebal::SimulationConfig config;
    config.runs = opt.runs;
    config.seed = linebal::RngSeed{opt.seed};
    const linebal::SimulationReport report =
        linebal::simulate(balance, instance, config, opt.threads);

    std::ostringstream out;
    if (opt.format == "csv") {
        out << "run,time_eff,yield_eff,efficiency,idle_minutes,output_units\n";
        for (std::size_t r = 0; r < report.runs.size(); ++r) {
            const auto& run = report.runs[r];
            double idle_total = 0.0;
            for (double idle : run.idle_minutes) idle_total += idle;
            out << (r + 1) << "," << linebal::double_text(run.time_efficiency) << ","
                << linebal::double_text(run.yield_efficiency) << ","
                << linebal::double_text(run.efficiency) << "," << linebal::double_text(idle_total)
                << "," << run.output_units << "\n";
        }
    } else {
        out << "name: " << instance.name << "\n";
        out << "method: " << opt.method << "\n";
        out << "cycle time per unit: " << linebal::double_text(cycle) << " min\n";
        out << "lot size: " << report.lot_size << "\n";
        out << "p1: " << linebal::double_text(opt.percentiles.p1)
            << "  p2: " << linebal::double_text(opt.percentiles.p2) << "\n";
        print_stations(out, balance);
        out << "runs: " << report.run_count << "\n";
        out << "seed: " << report.seed.value << "\n";
        out << "time efficiency:    mean " << linebal::fixed_text(report.mean_time_efficiency, 4)
            << "  sd " << linebal::fixed_text(report.sd_time_efficiency, 4) << "\n";
        out << "yield efficiency:   mean " << linebal::fixed_text(report.mean_yield_efficiency, 4)
            << "  sd " << linebal::fixed_text(report.sd_yield_efficiency, 4) << "\n";
        out << "overall efficiency: mean " << linebal::fixed_text(report.mean_efficiency, 4)
            << "  sd " << linebal::fixed_text(report.sd_efficiency, 4) << "\n";
        out << "mean idle per station (min):";
        for (std::size_t s = 0; s < report.mean_idle_minutes.size(); ++s) {
            out << (s == 0 ? " " : ", ") << "WS" << (s + 1) << " "
                << linebal::fixed_text(report.mean_idle_minutes[s], 2);
        }
        out << "\n";
        out << "mean output: " << linebal::fixed_text(report.mean_output_units, 1) << " units\n";
    }
    std::cout << out.str();
    return kExitOk;
}

int run_sweep(const CommonOptions& opt) {
    const linebal::Instance instance = linebal::load_instance(opt.instance_path);
    const double cycle = cycle_per_unit_of(opt, instance);
    const std::vector<linebal::SweepPoint> grid = linebal::percentile_grid(opt.grid_step);

    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << opt.out_path << "' for writing\n";
        return kExitIo;
    }

    linebal::SimulationConfig config;
    config.runs = opt.runs;
    config.seed = linebal::RngSeed{opt.seed};
    const std::vector<linebal::SweepRow> rows =
        linebal::sweep(instance, cycle, method_of(opt), grid, config, opt.threads);
    linebal::write_sweep_csv(rows, file);
    file.flush();
    if (!file.good()) {
        std::cerr << "error: failed while writing '" << opt.out_path << "'\n";
        return kExitIo;
    }

    int feasible = 0;
    const linebal::SweepRow* best = nullptr;
    for (const auto& row : rows) {
        if (!row.feasible) continue;
        ++feasible;
        if (best == nullptr || row.mean_efficiency > best->mean_efficiency) best = &row;
    }

    std::ostringstream out;
    out << "name: " << instance.name << "\n";
    out << "method: " << opt.method << "\n";
    out << "cycle time per unit: " << linebal::double_text(cycle) << " min\n";
    out << "grid points: " << rows.size() << "\n";
    out << "feasible points: " << feasible << "\n";
    out << "wrote " << opt.out_path << "\n";
    if (best != nullptr) {
        const double stderr_best =
            opt.runs > 1 ? best->sd_efficiency / std::sqrt(static_cast<double>(opt.runs)) : 0.0;
        out << "best efficiency: " << linebal::fixed_text(best->mean_efficiency, 4) << " at p1="
            << linebal::fixed_text(best->p1, 2) << " p2=" << linebal::fixed_text(best->p2, 2)
            << " (" << best->stations << " stations)\n";
        out << "within one standard error of the best:\n";
        std::vector<const linebal::SweepRow*> near;
        for (const auto& row : rows) {
            if (row.feasible && row.mean_efficiency >= best->mean_efficiency - stderr_best) {
                near.push_back(&row);
            }
        }
        std::sort(near.begin(), near.end(), [](const auto* a, const auto* b) {
            return a->mean_efficiency > b->mean_efficiency;
        });
        for (const auto* row : near) {
            out << "  p1=" << linebal::fixed_text(row->p1, 2)
                << " p2=" << linebal::fixed_text(row->p2, 2) << "  efficiency "
                << linebal::fixed_text(row->mean_efficiency, 4) << "  stations " << row->stations
                << "\n";
        }
    }
    std::cout << out.str();
    return kExitOk;
}

int run_matrix(const CommonOptions& opt) {
    const linebal::Instance instance = linebal::load_instance(opt.instance_path);
    const linebal::PrecedenceMatrix matrix(instance);
    const int n = matrix.task_count();

    std::ostringstream out;
    out << "name: " << instance.name << "\n";
    out << "tasks: " << n << "\n";
    out << std::setw(4) << "";
    for (int j = 1; j <= n; ++j) out << std::setw(3) << j;
    out << "\n";
    for (int i = 1; i <= n; ++i) {
        out << std::setw(4) << i;
        for (int j = 1; j <= n; ++j) {
            out << std::setw(3) << (matrix.immediately_precedes(i, j) ? "1" : ".");
        }
        out << "\n";
    }
    std::cout << out.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Assembly line balancing under stochastic task times and rework"};
    app.require_subcommand(1);

    CommonOptions opt;

    CLI::App* adjust = app.add_subcommand(
        "adjust", "Print percentile-adjusted processing times for every task");
    add_instance_option(adjust, opt);
    add_percentile_options(adjust, opt);
    add_format_option(adjust, opt);

    CLI::App* balance =
        app.add_subcommand("balance", "Assign tasks to workstations for a fixed cycle time");
    add_instance_option(balance, opt);
    add_percentile_options(balance, opt);
    add_method_option(balance, opt);
    add_cycle_options(balance, opt);

    CLI::App* simulate =
        app.add_subcommand("simulate", "Balance, then Monte-Carlo simulate lot production");
    add_instance_option(simulate, opt);
    add_percentile_options(simulate, opt);
    add_method_option(simulate, opt);
    add_cycle_options(simulate, opt);
    simulate->add_option("--runs", opt.runs, "Simulated lots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    simulate->add_option("--threads", opt.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_option(simulate, opt);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Balance and simulate a whole percentile grid; write CSV");
    add_instance_option(sweep, opt);
    add_method_option(sweep, opt);
    add_cycle_options(sweep, opt);
    sweep->add_option("--grid-step", opt.grid_step, "Grid step on both percentile axes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--runs", opt.runs, "Simulated lots per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    sweep->add_option("--threads", opt.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--out", opt.out_path, "Output CSV path")->required();

    CLI::App* matrix =
        app.add_subcommand("matrix", "Print the immediate-precedence matrix");
    add_instance_option(matrix, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    opt.has_cycle_per_lot = (balance->count("--cycle-per-lot") > 0) ||
                            (simulate->count("--cycle-per-lot") > 0) ||
                            (sweep->count("--cycle-per-lot") > 0);

    try {
        if (app.got_subcommand(adjust)) return run_adjust(opt);
        if (app.got_subcommand(balance)) return run_balance(opt);
        if (app.got_subcommand(simulate)) return run_simulate(opt);
        if (app.got_subcommand(sweep)) return run_sweep(opt);
        if (app.got_subcommand(matrix)) return run_matrix(opt);
    } catch (const linebal::ParseError& e) {
        for (const auto& issue : e.issues()) std::cerr << "error: " << issue << "\n";
        return kExitInput;
    } catch (const linebal::ValidationError& e) {
        for (const auto& issue : e.issues()) std::cerr << "error: " << issue << "\n";
        return kExitInput;
    } catch (const linebal::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
