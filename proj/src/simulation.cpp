#include "linebal/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "linebal/adjust.hpp"

namespace linebal {

RunRecord simulate_lot(const LineBalance& balance, const Instance& instance, int lot_size,
                       RngStream& rng) {
    if (lot_size < 1) {
        throw std::invalid_argument("simulate_lot: lot size must be >= 1");
    }
    const int n = static_cast<int>(instance.tasks.size());
    std::vector<const TaskSpec*> task_of(n + 1, nullptr);
    for (const auto& t : instance.tasks) task_of[t.id] = &t;

    const std::size_t station_count = balance.stations.size();
    const double budget = static_cast<double>(lot_size) * balance.cycle_time_per_unit;

    RunRecord rec;
    rec.idle_minutes.reserve(station_count);
    rec.station_outputs.reserve(station_count);

    long long input = lot_size;
    double idle_total = 0.0;
    for (const auto& station : balance.stations) {
        double demand = 0.0;
        for (int id : station) {
            const TaskSpec& task = *task_of[id];
            for (long long unit = 0; unit < input; ++unit) {
                demand += sample_normal(task.proc, rng);
            }
        }
        for (int id : station) {
            const TaskSpec& task = *task_of[id];
            const double rate =
                defect_probability(task, instance.lot_size) * static_cast<double>(input);
            const long long reworks = sample_poisson(PoissonParams{rate}, rng);
            for (long long r = 0; r < reworks; ++r) {
                demand += sample_normal(task.dismantle, rng);
                demand += sample_normal(task.proc, rng);
            }
        }

        long long output = input;
        if (demand > budget + 1e-9 && input > 0) {
            output = static_cast<long long>(
                std::floor(static_cast<double>(input) * budget / demand));
        }
        const double idle = std::max(0.0, budget - demand);
        idle_total += idle;
        rec.idle_minutes.push_back(idle);
        rec.station_outputs.push_back(output);
        input = output;
    }

    rec.output_units = input;
    rec.time_efficiency =
        station_count == 0
            ? 1.0
            : 1.0 - idle_total / (static_cast<double>(station_count) * budget);
    rec.yield_efficiency = static_cast<double>(input) / static_cast<double>(lot_size);
    rec.efficiency = std::min(rec.time_efficiency, rec.yield_efficiency);
    return rec;
}

namespace {

void mean_sd(const std::vector<double>& xs, double& mean, double& sd) {
    const std::size_t n = xs.size();
    double sum = 0.0;
    for (double x : xs) sum += x;
    mean = n ? sum / static_cast<double>(n) : 0.0;
    if (n < 2) {
        sd = 0.0;
        return;
    }
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    sd = std::sqrt(ss / static_cast<double>(n - 1));
}

}  // namespace

SimulationReport simulate(const LineBalance& balance, const Instance& instance,
                          const SimulationConfig& config, int threads) {
    if (config.runs < 1) {
        throw std::invalid_argument("simulate: runs must be >= 1");
    }
    const int lot_size = config.lot_size_override.value_or(instance.lot_size);
    const int runs = config.runs;

    std::vector<RunRecord> records(runs);
    auto worker = [&](int first, int step) {
        for (int r = first; r < runs; r += step) {
            RngStream stream(substream_seed(config.seed, static_cast<std::uint64_t>(r)));
            records[r] = simulate_lot(balance, instance, lot_size, stream);
        }
    };

    const int used = std::clamp(threads, 1, runs);
    if (used == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(used);
        for (int t = 0; t < used; ++t) pool.emplace_back(worker, t, used);
        for (auto& th : pool) th.join();
    }

    SimulationReport report;
    report.runs = std::move(records);
    report.seed = config.seed;
    report.run_count = runs;
    report.cycle_time_per_unit = balance.cycle_time_per_unit;
    report.lot_size = lot_size;

    std::vector<double> series(runs);
    auto fill = [&](auto member) {
        for (int r = 0; r < runs; ++r) series[r] = report.runs[r].*member;
    };
    fill(&RunRecord::time_efficiency);
    mean_sd(series, report.mean_time_efficiency, report.sd_time_efficiency);
    fill(&RunRecord::yield_efficiency);
    mean_sd(series, report.mean_yield_efficiency, report.sd_yield_efficiency);
    fill(&RunRecord::efficiency);
    mean_sd(series, report.mean_efficiency, report.sd_efficiency);

    report.mean_idle_minutes.assign(balance.stations.size(), 0.0);
    double output_sum = 0.0;
    for (const auto& rec : report.runs) {
        for (std::size_t s = 0; s < rec.idle_minutes.size(); ++s) {
            report.mean_idle_minutes[s] += rec.idle_minutes[s];
        }
        output_sum += static_cast<double>(rec.output_units);
    }
    for (auto& idle : report.mean_idle_minutes) idle /= static_cast<double>(runs);
    report.mean_output_units = output_sum / static_cast<double>(runs);
    return report;
}

}  // namespace linebal
