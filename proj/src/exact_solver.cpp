#include "linebal/exact_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "linebal/moodie_young.hpp"
#include "linebal/precedence.hpp"

namespace linebal {

namespace {

constexpr double kFitTolerance = 1e-9;

int ceil_stations(double time, double cycle) {
    return std::max(1, static_cast<int>(std::ceil(time / cycle - kFitTolerance)));
}

// Feasibility search for exactly m stations. Tasks are placed in
// topological order; a task may go into any station inside its
// [earliest, latest] window whose load still fits, so stations left
// empty now can be filled by later tasks. Earliest/latest come from the
// transitive predecessor/successor time sums plus, dynamically, the
// stations of already placed immediate predecessors.
class WindowSearch {
public:
    WindowSearch(const std::vector<int>& topo, const std::vector<double>& time_of,
                 const std::vector<std::vector<int>>& preds_of,
                 const std::vector<double>& head_time, const std::vector<double>& tail_time,
                 double cycle, const SolverLimits& limits, std::uint64_t& nodes)
        : topo_(topo),
          time_of_(time_of),
          preds_of_(preds_of),
          head_time_(head_time),
          tail_time_(tail_time),
          cycle_(cycle),
          limits_(limits),
          nodes_(nodes),
          deadline_set_(limits.time_budget_seconds.has_value()) {
        if (deadline_set_) {
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*limits.time_budget_seconds));
        }
    }

    bool out_of_budget() const { return exhausted_; }

    // On success, fills station_of (1-based stations) and returns true.
    bool run(int m, std::vector<int>& station_of) {
        const int n = static_cast<int>(topo_.size());
        station_of.assign(n + 1, 0);
        loads_.assign(m + 1, 0.0);
        earliest_.assign(n + 1, 1);
        latest_.assign(n + 1, m);
        for (int id = 1; id <= n; ++id) {
            earliest_[id] = ceil_stations(head_time_[id], cycle_);
            latest_[id] = m + 1 - ceil_stations(tail_time_[id], cycle_);
            if (earliest_[id] > latest_[id]) return false;
        }
        return place(0, station_of);
    }

private:
    bool place(int idx, std::vector<int>& station_of) {
        if (idx == static_cast<int>(topo_.size())) return true;
        const int id = topo_[idx];
        const double t = time_of_[id];

        int lo = earliest_[id];
        for (int pred : preds_of_[id]) lo = std::max(lo, station_of[pred]);

        for (int j = lo; j <= latest_[id]; ++j) {
            if (loads_[j] + t > cycle_ + kFitTolerance) continue;
            if (++nodes_ >= limits_.node_budget || time_exceeded()) {
                exhausted_ = true;
                return false;
            }
            loads_[j] += t;
            station_of[id] = j;
            if (place(idx + 1, station_of)) return true;
            loads_[j] -= t;
            station_of[id] = 0;
            if (exhausted_) return false;
        }
        return false;
    }

    bool time_exceeded() {
        if (!deadline_set_ || (nodes_ & 0x3ff) != 0) return false;
        return std::chrono::steady_clock::now() > deadline_;
    }

    const std::vector<int>& topo_;
    const std::vector<double>& time_of_;
    const std::vector<std::vector<int>>& preds_of_;
    const std::vector<double>& head_time_;
    const std::vector<double>& tail_time_;
    double cycle_;
    const SolverLimits& limits_;
    std::uint64_t& nodes_;
    bool deadline_set_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<double> loads_;
    std::vector<int> earliest_;
    std::vector<int> latest_;
    bool exhausted_ = false;
};

LineBalance balance_from_stations(const std::vector<int>& topo,
                                  const std::vector<int>& station_of,
                                  const std::vector<double>& time_of, double cycle) {
    // Compact station indices to 1..k preserving order, then emit tasks
    // per station in topological order.
    int max_station = 0;
    for (int id : topo) max_station = std::max(max_station, station_of[id]);
    std::vector<int> dense(max_station + 1, 0);
    for (int id : topo) dense[station_of[id]] = 1;
    int next = 0;
    for (int j = 1; j <= max_station; ++j) {
        if (dense[j]) dense[j] = ++next;
    }

    LineBalance out;
    out.cycle_time_per_unit = cycle;
    out.stations.resize(next);
    out.loads.assign(next, 0.0);
    for (int id : topo) {
        const int s = dense[station_of[id]] - 1;
        out.stations[s].push_back(id);
        out.loads[s] += time_of[id];
        out.log.push_back({id, s});
    }
    return out;
}

}  // namespace

ExactResult solve_exact(const Instance& instance, const AdjustedTimes& times,
                        double cycle_time_per_unit, const SolverLimits& limits) {
    const int n = static_cast<int>(instance.tasks.size());
    ExactResult result;
    result.balance = moodie_young(instance, times, cycle_time_per_unit);
    result.optimal = true;
    if (n == 0) return result;

    std::vector<double> time_of(n + 1, 0.0);
    double total = 0.0;
    for (int id = 1; id <= n; ++id) {
        time_of[id] = times.adjusted_for(id);
        total += time_of[id];
    }

    const int upper = static_cast<int>(result.balance.stations.size());
    const int lower = ceil_stations(total, cycle_time_per_unit);
    if (upper <= lower) return result;

    const PrecedenceMatrix matrix(instance);
    const auto topo = matrix.topological_order();
    std::vector<std::vector<int>> preds_of(n + 1);
    for (int succ = 1; succ <= n; ++succ) {
        for (int pred = 1; pred <= n; ++pred) {
            if (matrix.immediately_precedes(pred, succ)) preds_of[succ].push_back(pred);
        }
    }

    // Transitive closure by propagating reachability in topological
    // order, then predecessor/successor time sums including the task.
    std::vector<std::vector<bool>> reaches(n + 1, std::vector<bool>(n + 1, false));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const int id = *it;
        for (int succ = 1; succ <= n; ++succ) {
            if (!matrix.immediately_precedes(id, succ)) continue;
            reaches[id][succ] = true;
            for (int beyond = 1; beyond <= n; ++beyond) {
                if (reaches[succ][beyond]) reaches[id][beyond] = true;
            }
        }
    }
    std::vector<double> head_time(n + 1, 0.0), tail_time(n + 1, 0.0);
    for (int id = 1; id <= n; ++id) {
        head_time[id] = time_of[id];
        tail_time[id] = time_of[id];
        for (int other = 1; other <= n; ++other) {
            if (reaches[other][id]) head_time[id] += time_of[other];
            if (reaches[id][other]) tail_time[id] += time_of[other];
        }
    }

    WindowSearch search(topo, time_of, preds_of, head_time, tail_time, cycle_time_per_unit,
                        limits, result.nodes_expanded);
    std::vector<int> station_of;
    for (int m = lower; m < upper; ++m) {
        if (search.run(m, station_of)) {
            result.balance =
                balance_from_stations(topo, station_of, time_of, cycle_time_per_unit);
            result.optimal = true;
            return result;
        }
        if (search.out_of_budget()) {
            result.optimal = false;
            return result;
        }
    }
    return result;
}

}  // namespace linebal
