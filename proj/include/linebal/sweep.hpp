#pragma once

#include <iosfwd>
#include <vector>

#include "linebal/exact_solver.hpp"
#include "linebal/model.hpp"
#include "linebal/simulation.hpp"

namespace linebal {

enum class BalanceMethod { moodie_young, exact };

/// Balances with the chosen method; the exact method uses default
/// solver limits.
LineBalance balance_with(BalanceMethod method, const Instance& instance,
                         const AdjustedTimes& times, double cycle_time_per_unit);

struct SweepPoint {
    double p1 = 0.5;
    double p2 = 0.5;
};

/// One grid point's outcome. Infeasible points (some adjusted time above
/// the cycle) are recorded with feasible = false and NaN statistics.
struct SweepRow {
    double p1 = 0.0;
    double p2 = 0.0;
    bool feasible = false;
    int stations = 0;
    double mean_time_efficiency = 0.0;
    double mean_yield_efficiency = 0.0;
    double mean_efficiency = 0.0;
    double sd_efficiency = 0.0;
};

/// Square percentile grid {0.05 + k*step <= 0.95 + 1e-9} on both axes,
/// p1-major. The default step 0.05 yields 19 x 19 = 361 points.
std::vector<SweepPoint> percentile_grid(double step = 0.05);

/// Balances and simulates every grid point in order. Point g simulates
/// on seed substream_seed(config.seed, g), so any sub-grid of a sweep
/// reproduces the full sweep's rows for matching point indices.
std::vector<SweepRow> sweep(const Instance& instance, double cycle_time_per_unit,
                            BalanceMethod method, const std::vector<SweepPoint>& grid,
                            const SimulationConfig& config, int threads = 1);

/// CSV with header p1,p2,stations,time_eff,yield_eff,eff_mean,eff_std,
/// feasible; LF line endings, '.' decimal separator, full precision.
/// Infeasible rows leave the four statistics empty.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace linebal
