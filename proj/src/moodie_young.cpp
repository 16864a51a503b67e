#include "linebal/moodie_young.hpp"

#include <stdexcept>

#include "linebal/precedence.hpp"

namespace linebal {

namespace {
constexpr double kFitTolerance = 1e-9;
}

LineBalance moodie_young(const Instance& instance, const AdjustedTimes& times,
                         double cycle_time_per_unit) {
    if (!(cycle_time_per_unit > 0.0)) {
        throw std::invalid_argument("moodie_young: cycle time must be positive");
    }
    const int n = static_cast<int>(instance.tasks.size());

    std::vector<int> oversized;
    for (int id = 1; id <= n; ++id) {
        if (times.adjusted_for(id) > cycle_time_per_unit + kFitTolerance) {
            oversized.push_back(id);
        }
    }
    if (!oversized.empty()) {
        throw InfeasibleError(std::move(oversized), cycle_time_per_unit);
    }

    const PrecedenceMatrix matrix(instance);
    std::vector<bool> assigned(n + 1, false);

    LineBalance balance;
    balance.cycle_time_per_unit = cycle_time_per_unit;
    double residual = cycle_time_per_unit;

    int assigned_count = 0;
    while (assigned_count < n) {
        const auto ready = matrix.schedulable(assigned);
        if (ready.empty()) {
            throw std::logic_error("moodie_young: no schedulable task in an acyclic instance");
        }

        // Longest schedulable task that fits; ascending scan keeps the
        // lowest id on ties.
        int pick = 0;
        double pick_time = -1.0;
        for (int id : ready) {
            const double t = times.adjusted_for(id);
            if (t <= residual + kFitTolerance && t > pick_time) {
                pick = id;
                pick_time = t;
            }
        }

        if (pick == 0) {
            balance.stations.emplace_back();
            balance.loads.push_back(0.0);
            residual = cycle_time_per_unit;
            continue;
        }

        if (balance.stations.empty()) {
            balance.stations.emplace_back();
            balance.loads.push_back(0.0);
        }
        balance.stations.back().push_back(pick);
        balance.loads.back() += pick_time;
        balance.log.push_back({pick, static_cast<int>(balance.stations.size()) - 1});
        residual -= pick_time;
        assigned[pick] = true;
        ++assigned_count;
    }

    // A trailing station can only be empty if the last opening was never
    // used, which the fit check above rules out; guard regardless.
    while (!balance.stations.empty() && balance.stations.back().empty()) {
        balance.stations.pop_back();
        balance.loads.pop_back();
    }
    return balance;
}

}  // namespace linebal
