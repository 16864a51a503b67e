#include "linebal/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include "linebal/adjust.hpp"
#include "linebal/moodie_young.hpp"
#include "linebal/num_text.hpp"

namespace linebal {

LineBalance balance_with(BalanceMethod method, const Instance& instance,
                         const AdjustedTimes& times, double cycle_time_per_unit) {
    if (method == BalanceMethod::moodie_young) {
        return moodie_young(instance, times, cycle_time_per_unit);
    }
    return solve_exact(instance, times, cycle_time_per_unit).balance;
}

std::vector<SweepPoint> percentile_grid(double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("percentile_grid: step must be positive");
    }
    std::vector<double> axis;
    for (int k = 0;; ++k) {
        const double p = 0.05 + static_cast<double>(k) * step;
        if (p > 0.95 + 1e-9) break;
        axis.push_back(p);
    }
    std::vector<SweepPoint> grid;
    grid.reserve(axis.size() * axis.size());
    for (double p1 : axis) {
        for (double p2 : axis) grid.push_back({p1, p2});
    }
    return grid;
}

std::vector<SweepRow> sweep(const Instance& instance, double cycle_time_per_unit,
                            BalanceMethod method, const std::vector<SweepPoint>& grid,
                            const SimulationConfig& config, int threads) {
    const int points = static_cast<int>(grid.size());
    std::vector<SweepRow> rows(points);

    auto evaluate = [&](int g) {
        const SweepPoint& point = grid[g];
        SweepRow row;
        row.p1 = point.p1;
        row.p2 = point.p2;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.mean_time_efficiency = nan;
        row.mean_yield_efficiency = nan;
        row.mean_efficiency = nan;
        row.sd_efficiency = nan;

        const auto times = adjust_instance(instance, {point.p1, point.p2});
        try {
            const LineBalance balance =
                balance_with(method, instance, times, cycle_time_per_unit);
            SimulationConfig point_config = config;
            point_config.seed = substream_seed(config.seed, static_cast<std::uint64_t>(g));
            const SimulationReport report = simulate(balance, instance, point_config);
            row.feasible = true;
            row.stations = static_cast<int>(balance.stations.size());
            row.mean_time_efficiency = report.mean_time_efficiency;
            row.mean_yield_efficiency = report.mean_yield_efficiency;
            row.mean_efficiency = report.mean_efficiency;
            row.sd_efficiency = report.sd_efficiency;
        } catch (const InfeasibleError&) {
            row.feasible = false;
        }
        rows[g] = row;
    };

    const int used = std::clamp(threads, 1, std::max(points, 1));
    if (used <= 1) {
        for (int g = 0; g < points; ++g) evaluate(g);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(used);
        for (int t = 0; t < used; ++t) {
            pool.emplace_back([&, t] {
                for (int g = t; g < points; g += used) evaluate(g);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "p1,p2,stations,time_eff,yield_eff,eff_mean,eff_std,feasible\n";
    for (const auto& row : rows) {
        out << double_text(row.p1) << ',' << double_text(row.p2) << ',' << row.stations
            << ',';
        if (row.feasible) {
            out << double_text(row.mean_time_efficiency) << ','
                << double_text(row.mean_yield_efficiency) << ','
                << double_text(row.mean_efficiency) << ',' << double_text(row.sd_efficiency);
        } else {
            out << ",,,";
        }
        out << ',' << (row.feasible ? '1' : '0') << '\n';
    }
}

}  // namespace linebal
