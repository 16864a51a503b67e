#include "linebal/adjust.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "linebal/stats.hpp"

namespace linebal {

double AdjustedTimes::adjusted_for(int id) const {
    if (id < 1 || id > static_cast<int>(tasks.size())) {
        throw std::out_of_range("no adjustment for task id " + std::to_string(id));
    }
    return tasks[id - 1].adjusted;
}

double AdjustedTimes::total() const {
    double sum = 0.0;
    for (const auto& t : tasks) sum += t.adjusted;
    return sum;
}

double defect_probability(const TaskSpec& task, int lot_size) {
    if (lot_size < 1) {
        throw std::domain_error("defect_probability: lot size must be >= 1");
    }
    return task.mean_defects_per_lot / static_cast<double>(lot_size);
}

namespace {

struct AdjustmentParts {
    double base;
    long long defect_count;
    double rework;
};

AdjustmentParts compute_parts(const TaskSpec& task, int lot_size,
                              const PercentileConfig& config) {
    const double z = normal_quantile(config.p1);
    const double rate = defect_probability(task, lot_size) * static_cast<double>(lot_size);
    const long long defects = poisson_quantile(config.p2, rate);

    const double base = std::max(0.0, task.proc.mean + z * task.proc.sd);
    const double per_defect = (task.dismantle.mean + task.proc.mean) +
                              z * std::hypot(task.dismantle.sd, task.proc.sd);
    const double rework = std::max(
        0.0, static_cast<double>(defects) / static_cast<double>(lot_size) * per_defect);
    return {base, defects, rework};
}

}  // namespace

double revised_rework_time(const TaskSpec& task, int lot_size, const PercentileConfig& config) {
    return compute_parts(task, lot_size, config).rework;
}

double adjusted_time(const TaskSpec& task, int lot_size, const PercentileConfig& config) {
    const auto parts = compute_parts(task, lot_size, config);
    return parts.base + parts.rework;
}

AdjustedTimes adjust_instance(const Instance& instance, const PercentileConfig& config) {
    AdjustedTimes out;
    out.config = config;
    out.lot_size = instance.lot_size;
    out.tasks.resize(instance.tasks.size());
    for (const auto& task : instance.tasks) {
        const auto parts = compute_parts(task, instance.lot_size, config);
        out.tasks[task.id - 1] = TaskAdjustment{task.id, parts.base, parts.defect_count,
                                                parts.rework, parts.base + parts.rework};
    }
    return out;
}

}  // namespace linebal
