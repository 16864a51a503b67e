#pragma once

#include <optional>
#include <vector>

#include "linebal/model.hpp"
#include "linebal/stats.hpp"

namespace linebal {

struct SimulationConfig {
    int runs = 100;
    RngSeed seed;
    /// Units launched per lot; defaults to the instance lot size. Defect
    /// probabilities stay tied to the instance lot size either way.
    std::optional<int> lot_size_override;
};

/// Outcome of pushing one lot down the line. Each station gets a budget
/// of lot_size * cycle_time_per_unit minutes; a station whose sampled
/// demand overruns the budget completes a proportional share of its
/// input, and the shortfall propagates downstream.
struct RunRecord {
    double time_efficiency = 0.0;   ///< 1 - idle share of total budget
    double yield_efficiency = 0.0;  ///< good units off the line / launched
    double efficiency = 0.0;        ///< min of the two components
    std::vector<double> idle_minutes;        ///< per station
    std::vector<long long> station_outputs;  ///< units leaving each station
    long long output_units = 0;              ///< good units off the line
};

struct SimulationReport {
    std::vector<RunRecord> runs;

    double mean_time_efficiency = 0.0, sd_time_efficiency = 0.0;
    double mean_yield_efficiency = 0.0, sd_yield_efficiency = 0.0;
    double mean_efficiency = 0.0, sd_efficiency = 0.0;
    std::vector<double> mean_idle_minutes;  ///< per station
    double mean_output_units = 0.0;

    // configuration echo
    RngSeed seed;
    int run_count = 0;
    double cycle_time_per_unit = 0.0;
    int lot_size = 0;
};

/// Simulates one lot of `lot_size` units on `rng`. Draw order is fixed:
/// per station, first the processing times of every unit task by task,
/// then per task one Poisson rework count (rate  defect probability x
/// station input) followed by a dismantle and a redo draw per rework.
RunRecord simulate_lot(const LineBalance& balance, const Instance& instance, int lot_size,
                       RngStream& rng);

/// Runs `config.runs` independent lots, run r on the substream
/// substream_seed(config.seed, r), and aggregates in run order. The
/// report is bit-identical for any `threads` value. Standard deviations
/// are sample deviations (n - 1); zero when runs < 2.
SimulationReport simulate(const LineBalance& balance, const Instance& instance,
                          const SimulationConfig& config, int threads = 1);

}  // namespace linebal
