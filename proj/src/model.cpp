#include "linebal/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace linebal {

namespace {

std::string join_lines(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += "\n";
        out += item;
    }
    return out;
}

std::string task_word(int id) { return "task " + std::to_string(id); }

std::string edge_word(const std::pair<int, int>& e) {
    return "edge " + std::to_string(e.first) + " -> " + std::to_string(e.second);
}

// Depth-first search for a cycle over tasks 1..n; returns a witness
// path like "1 -> 2 -> 1", or an empty string if the graph is acyclic.
std::string find_cycle(int n, const std::vector<std::vector<int>>& succs) {
    enum : char { fresh, active, done };
    std::vector<char> state(n + 1, fresh);
    std::vector<int> trail;
    std::string witness;

    auto visit = [&](auto&& self, int node) -> bool {
        state[node] = active;
        trail.push_back(node);
        for (int next : succs[node]) {
            if (state[next] == active) {
                std::ostringstream path;
                auto start = std::find(trail.begin(), trail.end(), next);
                for (auto it = start; it != trail.end(); ++it) path << *it << " -> ";
                path << next;
                witness = path.str();
                return true;
            }
            if (state[next] == fresh && self(self, next)) return true;
        }
        trail.pop_back();
        state[node] = done;
        return false;
    };

    for (int id = 1; id <= n; ++id) {
        if (state[id] == fresh && visit(visit, id)) return witness;
    }
    return {};
}

}  // namespace

const TaskSpec& Instance::task(int id) const {
    for (const auto& t : tasks) {
        if (t.id == id) return t;
    }
    throw std::out_of_range("no task with id " + std::to_string(id));
}

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error(join_lines(issues)), issues_(std::move(issues)) {}

InfeasibleError::InfeasibleError(std::vector<int> task_ids, double cycle_time)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "cycle time " << cycle_time << " is too short for task";
          if (task_ids.size() > 1) msg << "s";
          for (std::size_t i = 0; i < task_ids.size(); ++i) {
              msg << (i ? ", " : " ") << task_ids[i];
          }
          return msg.str();
      }()),
      task_ids_(std::move(task_ids)),
      cycle_time_(cycle_time) {}

std::vector<std::string> validate(const Instance& instance) {
    std::vector<std::string> issues;
    const int n = static_cast<int>(instance.tasks.size());

    if (instance.lot_size < 1) {
        issues.push_back("lot_size must be >= 1, got " + std::to_string(instance.lot_size));
    }

    std::set<int> seen;
    for (const auto& t : instance.tasks) {
        if (!seen.insert(t.id).second) {
            issues.push_back("duplicate task id " + std::to_string(t.id));
        }
    }
    bool ids_ok = static_cast<int>(seen.size()) == n;
    for (int id = 1; id <= n && ids_ok; ++id) {
        if (!seen.count(id)) {
            issues.push_back("task ids must be contiguous from 1; id " + std::to_string(id) +
                             " is missing");
            ids_ok = false;
        }
    }
    if (ids_ok && !seen.empty() && (*seen.begin() < 1 || *seen.rbegin() > n)) {
        issues.push_back("task ids must be contiguous from 1");
        ids_ok = false;
    }

    for (const auto& t : instance.tasks) {
        if (t.proc.mean < 0.0) {
            issues.push_back(task_word(t.id) + ": processing mean must be >= 0");
        }
        if (t.proc.sd < 0.0) {
            issues.push_back(task_word(t.id) + ": processing sd must be >= 0");
        }
        if (t.dismantle.mean < 0.0) {
            issues.push_back(task_word(t.id) + ": dismantle mean must be >= 0");
        }
        if (t.dismantle.sd < 0.0) {
            issues.push_back(task_word(t.id) + ": dismantle sd must be >= 0");
        }
        if (t.mean_defects_per_lot < 0.0) {
            issues.push_back(task_word(t.id) + ": mean defects per lot must be >= 0");
        }
    }

    std::vector<std::vector<int>> succs(n + 1);
    for (const auto& e : instance.edges) {
        const bool from_ok = ids_ok && e.first >= 1 && e.first <= n;
        const bool to_ok = ids_ok && e.second >= 1 && e.second <= n;
        if (!from_ok || !to_ok) {
            issues.push_back(edge_word(e) + ": " +
                             std::to_string(!from_ok ? e.first : e.second) +
                             " is not a task id");
            continue;
        }
        succs[e.first].push_back(e.second);
    }

    if (ids_ok) {
        std::string cycle = find_cycle(n, succs);
        if (!cycle.empty()) {
            issues.push_back("cycle detected: " + cycle);
        }
    }

    return issues;
}

const Instance& validate_or_throw(const Instance& instance) {
    auto issues = validate(instance);
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
    return instance;
}

std::vector<std::string> check_balance(const LineBalance& balance, const Instance& instance) {
    std::vector<std::string> issues;
    const int n = static_cast<int>(instance.tasks.size());

    if (balance.cycle_time_per_unit <= 0.0) {
        issues.push_back("cycle time must be positive");
    }
    if (balance.loads.size() != balance.stations.size()) {
        issues.push_back("loads and stations differ in length");
    }

    std::vector<int> station_of(n + 1, -1);
    for (std::size_t s = 0; s < balance.stations.size(); ++s) {
        if (balance.stations[s].empty()) {
            issues.push_back("station " + std::to_string(s + 1) + " is empty");
        }
        for (int id : balance.stations[s]) {
            if (id < 1 || id > n) {
                issues.push_back("station " + std::to_string(s + 1) + " holds unknown task " +
                                 std::to_string(id));
            } else if (station_of[id] != -1) {
                issues.push_back(task_word(id) + " is assigned twice");
            } else {
                station_of[id] = static_cast<int>(s);
            }
        }
    }
    for (int id = 1; id <= n; ++id) {
        if (station_of[id] == -1) {
            issues.push_back(task_word(id) + " is not assigned to any station");
        }
    }

    for (const auto& e : instance.edges) {
        if (e.first >= 1 && e.first <= n && e.second >= 1 && e.second <= n &&
            station_of[e.first] != -1 && station_of[e.second] != -1 &&
            station_of[e.first] > station_of[e.second]) {
            issues.push_back(edge_word(e) + ": predecessor sits in station " +
                             std::to_string(station_of[e.first] + 1) + " after station " +
                             std::to_string(station_of[e.second] + 1));
        }
    }

    for (std::size_t s = 0; s < balance.loads.size(); ++s) {
        if (balance.loads[s] > balance.cycle_time_per_unit + 1e-9) {
            issues.push_back("station " + std::to_string(s + 1) + " load " +
                             std::to_string(balance.loads[s]) + " exceeds the cycle time");
        }
    }

    return issues;
}

}  // namespace linebal
