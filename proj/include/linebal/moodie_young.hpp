#pragma once

#include "linebal/adjust.hpp"
#include "linebal/model.hpp"

namespace linebal {

/// Largest-candidate heuristic for minimizing stations at a fixed cycle
/// time: repeatedly assign the longest schedulable task that fits the
/// open station's residual time (ties toward the lower id), opening a
/// new station when nothing fits. Exact fits are accepted within 1e-9.
/// Throws InfeasibleError listing every task longer than the cycle.
LineBalance moodie_young(const Instance& instance, const AdjustedTimes& times,
                         double cycle_time_per_unit);

}  // namespace linebal
