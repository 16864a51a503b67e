#pragma once

#include <cstdint>
#include <optional>

#include "linebal/adjust.hpp"
#include "linebal/model.hpp"

namespace linebal {

struct SolverLimits {
    std::uint64_t node_budget = 10'000'000;  ///< branch attempts
    std::optional<double> time_budget_seconds;
};

struct ExactResult {
    LineBalance balance;
    bool optimal = false;  ///< false when a budget stopped the search
    std::uint64_t nodes_expanded = 0;
};

/// Exact minimum-station balance for a fixed cycle time, preferring the
/// lexicographically earliest station loading among optima. Depth-first
/// feasibility search over increasing station counts m: tasks are tried
/// in topological order against per-task station windows derived from
/// predecessor and successor time sums. The heuristic solution seeds the
/// upper bound; if a budget runs out the incumbent is returned with
/// optimal = false. Throws InfeasibleError like the heuristic.
ExactResult solve_exact(const Instance& instance, const AdjustedTimes& times,
                        double cycle_time_per_unit, const SolverLimits& limits = {});

}  // namespace linebal
