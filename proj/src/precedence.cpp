#include "linebal/precedence.hpp"

#include <stdexcept>

namespace linebal {

PrecedenceMatrix::PrecedenceMatrix(const Instance& instance)
    : n_(static_cast<int>(instance.tasks.size())),
      cells_(static_cast<std::size_t>(n_) * n_, 0) {
    for (const auto& e : instance.edges) {
        if (e.first < 1 || e.first > n_ || e.second < 1 || e.second > n_) {
            throw std::out_of_range("edge endpoint outside 1..n");
        }
        cells_[index(e.first, e.second)] = 1;
    }
}

std::vector<int> PrecedenceMatrix::schedulable(const std::vector<bool>& assigned) const {
    std::vector<int> ready;
    for (int succ = 1; succ <= n_; ++succ) {
        if (succ < static_cast<int>(assigned.size()) && assigned[succ]) continue;
        bool preds_done = true;
        for (int pred = 1; pred <= n_; ++pred) {
            if (cells_[index(pred, succ)] &&
                (pred >= static_cast<int>(assigned.size()) || !assigned[pred])) {
                preds_done = false;
                break;
            }
        }
        if (preds_done) ready.push_back(succ);
    }
    return ready;
}

std::vector<int> PrecedenceMatrix::topological_order() const {
    std::vector<bool> assigned(n_ + 1, false);
    std::vector<int> order;
    order.reserve(n_);
    while (static_cast<int>(order.size()) < n_) {
        auto ready = schedulable(assigned);
        if (ready.empty()) {
            throw std::logic_error("topological_order: instance has a cycle");
        }
        order.push_back(ready.front());
        assigned[ready.front()] = true;
    }
    return order;
}

std::vector<std::pair<int, int>> PrecedenceMatrix::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int pred = 1; pred <= n_; ++pred) {
        for (int succ = 1; succ <= n_; ++succ) {
            if (cells_[index(pred, succ)]) out.emplace_back(pred, succ);
        }
    }
    return out;
}

}  // namespace linebal
