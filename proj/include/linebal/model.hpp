#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linebal/stats.hpp"

namespace linebal {

/// One task's distributional data. Times are minutes per unit; defects
/// are the mean number of defective units the task produces per lot.
struct TaskSpec {
    int id = 0;  ///< positive; ids of an instance are contiguous from 1
    NormalParams proc;
    NormalParams dismantle;
    double mean_defects_per_lot = 0.0;

    bool operator==(const TaskSpec&) const = default;
};

/// A balancing problem: tasks, immediate-precedence edges, lot size.
/// Edges hold the immediate relation only, sorted and deduplicated;
/// transitive precedence is always derived, never stored.
struct Instance {
    std::string name;
    std::vector<TaskSpec> tasks;
    std::vector<std::pair<int, int>> edges;  ///< (predecessor, successor)
    int lot_size = 1;
    std::optional<std::string> provenance;

    /// Lookup by id; throws std::out_of_range for unknown ids.
    const TaskSpec& task(int id) const;

    bool operator==(const Instance&) const = default;
};

/// Percentile pair steering the time adjustment: p1 picks the normal
/// quantile for time variation, p2 the Poisson quantile for defects.
struct PercentileConfig {
    double p1 = 0.5;  ///< in (0, 1)
    double p2 = 0.5;  ///< in [0, 1)
};

/// One entry of the chronological assignment log. Stations are 0-based
/// indices into LineBalance::stations.
struct StationAssignment {
    int task = 0;
    int station = 0;
};

/// A balanced line. Stations hold task ids in assignment order; loads
/// are the summed task times used by the balancing pass.
struct LineBalance {
    double cycle_time_per_unit = 0.0;
    std::vector<std::vector<int>> stations;
    std::vector<double> loads;
    std::vector<StationAssignment> log;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues);

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// Thrown when the cycle time cannot accommodate every task.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(std::vector<int> task_ids, double cycle_time);

    const std::vector<int>& task_ids() const noexcept { return task_ids_; }
    double cycle_time() const noexcept { return cycle_time_; }

private:
    std::vector<int> task_ids_;
    double cycle_time_;
};

/// Every invariant violation, one message per problem; empty means the
/// instance is valid. Checks id contiguity, field signs, edge endpoints,
/// lot size, and acyclicity (reporting one witness cycle).
std::vector<std::string> validate(const Instance& instance);

/// Returns the argument unchanged if valid, else throws ValidationError
/// carrying every violation.
const Instance& validate_or_throw(const Instance& instance);

/// Violations of the LineBalance contract against an instance: stations
/// partition the tasks, no edge points to an earlier station, loads stay
/// within cycle + 1e-9, and no station is empty.
std::vector<std::string> check_balance(const LineBalance& balance, const Instance& instance);

}  // namespace linebal
