#pragma once

#include <vector>

#include "linebal/model.hpp"

namespace linebal {

/// Per-task breakdown of the adjusted processing time at one percentile
/// configuration. With z the p1 normal quantile and K the p2 Poisson
/// quantile of the per-lot defect count:
///   base     = max(0, mean_proc + z * sd_proc)
///   rework   = max(0, (K / lot) * ((mean_dis + mean_proc)
///                                  + z * sqrt(sd_dis^2 + sd_proc^2)))
///   adjusted = base + rework
struct TaskAdjustment {
    int id = 0;
    double base = 0.0;
    long long defect_count = 0;
    double rework = 0.0;
    double adjusted = 0.0;
};

/// Adjusted times for a whole instance, ordered by task id.
struct AdjustedTimes {
    PercentileConfig config;
    int lot_size = 1;
    std::vector<TaskAdjustment> tasks;

    double adjusted_for(int id) const;
    double total() const;
};

/// Probability that a unit leaves `task` defective: the task's mean
/// defects per lot divided by the lot size.
double defect_probability(const TaskSpec& task, int lot_size);

/// Rework allowance per unit at the given percentiles. The defect count
/// is the p2 Poisson quantile at rate defect_probability * lot_size;
/// each defect costs one dismantle plus one redo of the task.
double revised_rework_time(const TaskSpec& task, int lot_size, const PercentileConfig& config);

/// Base time at the p1 percentile plus the rework allowance.
double adjusted_time(const TaskSpec& task, int lot_size, const PercentileConfig& config);

/// Applies adjusted_time to every task of a validated instance.
/// Quantile domain errors (p1 outside (0,1), p2 outside [0,1)) propagate
/// as std::domain_error.
AdjustedTimes adjust_instance(const Instance& instance, const PercentileConfig& config);

}  // namespace linebal
