#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linebal/model.hpp"

namespace linebal {

/// Dense immediate-precedence matrix over a validated instance; cell
/// (pred, succ) is set iff the edge is in the instance. Ids are 1-based.
class PrecedenceMatrix {
public:
    explicit PrecedenceMatrix(const Instance& instance);

    int task_count() const noexcept { return n_; }

    bool immediately_precedes(int pred, int succ) const {
        return cells_[index(pred, succ)] != 0;
    }

    /// Tasks not yet in `assigned` whose every immediate predecessor is
    /// in `assigned`, ascending. `assigned` is indexed by id; index 0 is
    /// ignored.
    std::vector<int> schedulable(const std::vector<bool>& assigned) const;

    /// Total order with every edge pointing forward; ties broken toward
    /// the lowest id.
    std::vector<int> topological_order() const;

    /// The edge set as sorted (pred, succ) pairs.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::size_t index(int pred, int succ) const {
        return static_cast<std::size_t>(pred - 1) * n_ + (succ - 1);
    }

    int n_;
    std::vector<std::uint8_t> cells_;
};

}  // namespace linebal
