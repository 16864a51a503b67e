#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "linebal/model.hpp"
#include "test_instances.hpp"

using namespace linebal;

namespace {

bool mentions(const std::vector<std::string>& issues, const std::string& needle) {
    return std::any_of(issues.begin(), issues.end(), [&](const std::string& s) {
        return s.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("bundled instances validate cleanly") {
    CHECK(validate(testdata::hoffman9()).empty());
    CHECK(validate(testdata::hoffman9_paper_adjusted()).empty());
    CHECK(validate(testdata::shirt15()).empty());
}

TEST_CASE("task lookup by id") {
    const Instance x = testdata::hoffman9();
    CHECK(x.task(7).proc.mean == 0.1);
    CHECK(x.task(7).proc.sd == 0.02);
    CHECK(x.task(9).dismantle.sd == 0.25);
    CHECK_THROWS_AS(x.task(10), std::out_of_range);
    CHECK_THROWS_AS(x.task(0), std::out_of_range);
}

TEST_CASE("validate flags a bad lot size") {
    Instance x = testdata::hoffman9();
    x.lot_size = 0;
    CHECK(mentions(validate(x), "lot_size"));
}

TEST_CASE("validate flags duplicate ids") {
    Instance x = testdata::hoffman9();
    x.tasks[3].id = 2;
    CHECK(mentions(validate(x), "duplicate task id 2"));
}

TEST_CASE("validate flags non-contiguous ids") {
    Instance x = testdata::hoffman9();
    x.tasks[3].id = 11;  // id 4 disappears, 11 is out of range
    x.edges = {};        // keep the id problem isolated
    const auto issues = validate(x);
    CHECK(mentions(issues, "id 4 is missing"));
}

TEST_CASE("validate flags negative fields per task") {
    Instance x = testdata::hoffman9();
    x.tasks[0].proc.mean = -0.1;
    x.tasks[1].proc.sd = -0.1;
    x.tasks[2].dismantle.mean = -1.0;
    x.tasks[3].dismantle.sd = -0.2;
    x.tasks[4].mean_defects_per_lot = -4.0;
    const auto issues = validate(x);
    CHECK(issues.size() == 5);
    CHECK(mentions(issues, "task 1: processing mean"));
    CHECK(mentions(issues, "task 2: processing sd"));
    CHECK(mentions(issues, "task 3: dismantle mean"));
    CHECK(mentions(issues, "task 4: dismantle sd"));
    CHECK(mentions(issues, "task 5: mean defects"));
}

TEST_CASE("a zero processing mean is allowed") {
    // Degenerate tasks carry published pre-adjusted times of exactly 0.
    Instance x = testdata::hoffman9_paper_adjusted();
    CHECK(x.task(7).proc.mean == 0.0);
    CHECK(validate(x).empty());
}

TEST_CASE("validate flags edges with unknown endpoints") {
    Instance x = testdata::hoffman9();
    x.edges.push_back({9, 12});
    const auto issues = validate(x);
    CHECK(mentions(issues, "edge 9 -> 12"));
    CHECK(mentions(issues, "12 is not a task id"));
}

TEST_CASE("validate reports a cycle witness") {
    Instance x = testdata::hoffman9();
    x.edges.push_back({9, 1});
    const auto issues = validate(x);
    CHECK(mentions(issues, "cycle detected"));
    CHECK(mentions(issues, "->"));
}

TEST_CASE("validate_or_throw carries every issue") {
    Instance x = testdata::hoffman9();
    x.lot_size = -3;
    x.tasks[0].proc.sd = -1.0;
    CHECK_THROWS_AS(validate_or_throw(x), ValidationError);
    try {
        validate_or_throw(x);
    } catch (const ValidationError& e) {
        CHECK(e.issues().size() == 2);
        CHECK(std::string(e.what()).find("lot_size") != std::string::npos);
    }
    CHECK(&validate_or_throw(testdata::hoffman9()) != nullptr);
}

TEST_CASE("InfeasibleError carries ids and cycle time") {
    const InfeasibleError e({3, 5}, 0.25);
    CHECK(e.task_ids() == std::vector<int>{3, 5});
    CHECK(e.cycle_time() == 0.25);
    const std::string what = e.what();
    CHECK(what.find("tasks 3, 5") != std::string::npos);
    CHECK(what.find("0.25") != std::string::npos);
}

TEST_CASE("check_balance accepts a correct assignment") {
    const Instance x = testdata::hoffman9_paper_adjusted();
    LineBalance b;
    b.cycle_time_per_unit = 2.0;
    b.stations = {{1, 3}, {2, 4, 7}, {5, 8}, {6, 9}};
    b.loads = {1.77, 1.67, 1.75, 1.79};
    CHECK(check_balance(b, x).empty());
}

TEST_CASE("check_balance catches structural violations") {
    const Instance x = testdata::hoffman9_paper_adjusted();
    LineBalance b;
    b.cycle_time_per_unit = 2.0;

    SUBCASE("missing and duplicated tasks") {
        b.stations = {{1, 3, 3}, {2, 4, 7}, {5, 8}, {6}};
        b.loads = {1.77, 1.67, 1.75, 0.84};
        const auto issues = check_balance(b, x);
        CHECK(mentions(issues, "task 3 is assigned twice"));
        CHECK(mentions(issues, "task 9 is not assigned"));
    }

    SUBCASE("precedence violation") {
        b.stations = {{2, 3}, {1, 4, 7}, {5, 8}, {6, 9}};
        b.loads = {1.64, 1.8, 1.75, 1.79};
        CHECK(mentions(check_balance(b, x), "edge 1 -> 2"));
    }

    SUBCASE("overloaded station") {
        b.stations = {{1, 2, 3, 4}, {5, 7, 8}, {6, 9}};
        b.loads = {3.44, 1.75, 1.79};
        CHECK(mentions(check_balance(b, x), "exceeds the cycle time"));
    }

    SUBCASE("empty station") {
        b.stations = {{1, 3}, {}, {2, 4, 7}, {5, 8}, {6, 9}};
        b.loads = {1.77, 0.0, 1.67, 1.75, 1.79};
        CHECK(mentions(check_balance(b, x), "station 2 is empty"));
    }

    SUBCASE("unknown task id") {
        b.stations = {{1, 3, 42}, {2, 4, 7}, {5, 8}, {6, 9}};
        b.loads = {1.77, 1.67, 1.75, 1.79};
        CHECK(mentions(check_balance(b, x), "unknown task 42"));
    }
}

TEST_CASE("instances compare by value") {
    CHECK(testdata::hoffman9() == testdata::hoffman9());
    Instance x = testdata::hoffman9();
    x.tasks[4].proc.mean += 1e-9;
    CHECK(x != testdata::hoffman9());
}
