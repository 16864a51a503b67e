#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // standard output only
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(LINEBAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string instance_path(const std::string& file) {
    return std::string(INSTANCES_DIR) + "/" + file;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("adjust prints the per-task table") {
    const CliResult r = run_cli("adjust " + instance_path("hoffman9.alb"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "name: hoffman9"));
    CHECK(contains(r.output, "lot size: 50"));
    CHECK(contains(r.output, "p1: 0.5  p2: 0.5"));
    CHECK(contains(r.output, "adjusted"));
    CHECK(contains(r.output, "0.84"));
    CHECK(contains(r.output, "0.30"));  // task 7's computed value, 2 decimals
    CHECK(contains(r.output, "total adjusted time per unit: 7.28 min"));
}

TEST_CASE("adjust emits full-precision CSV") {
    const CliResult r =
        run_cli("adjust " + instance_path("hoffman9.alb") + " --format csv");
    CHECK(r.exit_code == 0);
    const auto lines = split_lines(r.output);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "task,base,defects,rework,adjusted");
    const auto task7 = split_fields(lines[7]);
    REQUIRE(task7.size() == 5);
    CHECK(task7[0] == "7");
    CHECK(task7[2] == "9");
    CHECK(std::stod(task7[4]) == doctest::Approx(0.298).epsilon(1e-9));
    const auto task1 = split_fields(lines[1]);
    CHECK(std::stod(task1[4]) == doctest::Approx(0.84).epsilon(1e-9));
}

TEST_CASE("adjust with a zero defect percentile returns the raw means") {
    const CliResult r =
        run_cli("adjust " + instance_path("hoffman9.alb") + " --p2 0 --format csv");
    CHECK(r.exit_code == 0);
    const auto lines = split_lines(r.output);
    REQUIRE(lines.size() == 10);
    const auto task1 = split_fields(lines[1]);
    CHECK(task1[4] == "0.5");
    const auto task9 = split_fields(lines[9]);
    CHECK(task9[4] == "0.6");
}

TEST_CASE("balance prints stations in arrow notation") {
    const CliResult r = run_cli("balance " + instance_path("hoffman9-paper-adjusted.alb") +
                                " --method moodie-young --cycle-per-lot 100");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "cycle time per unit: 2 min"));
    CHECK(contains(r.output, "lower bound: 4"));
    CHECK(contains(r.output, "stations: 4"));
    CHECK(contains(r.output, "WS1: 1→3  (load 1.77, idle 0.23)"));
    CHECK(contains(r.output, "WS2: 2→4→7  (load 1.67, idle 0.33)"));
    CHECK(contains(r.output, "WS3: 5→8  (load 1.75, idle 0.25)"));
    CHECK(contains(r.output, "WS4: 6→9  (load 1.79, idle 0.21)"));
}

TEST_CASE("balance with the exact method reports optimality") {
    const CliResult r = run_cli("balance " + instance_path("hoffman9.alb") +
                                " --method ilp --cycle-per-unit 2.0 --p2 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "stations: 2"));
    CHECK(contains(r.output, "proven optimal: yes"));
}

TEST_CASE("balance per-lot and per-unit cycles agree") {
    const CliResult lot = run_cli("balance " + instance_path("hoffman9.alb") +
                                  " --method moodie-young --cycle-per-lot 50");
    const CliResult unit = run_cli("balance " + instance_path("hoffman9.alb") +
                                   " --method moodie-young --cycle-per-unit 1.0");
    CHECK(lot.exit_code == 0);
    CHECK(lot.output == unit.output);
    CHECK(contains(lot.output, "stations: 9"));
}

TEST_CASE("an infeasible cycle time exits with code 3") {
    const CliResult r = run_cli("balance " + instance_path("hoffman9.alb") +
                                " --method ilp --cycle-per-unit 0.5");
    CHECK(r.exit_code == 3);
}

TEST_CASE("cycle options are exactly-one-of") {
    const CliResult neither =
        run_cli("balance " + instance_path("hoffman9.alb") + " --method ilp");
    CHECK(neither.exit_code == 2);
    const CliResult both = run_cli("balance " + instance_path("hoffman9.alb") +
                                   " --cycle-per-unit 1 --cycle-per-lot 50");
    CHECK(both.exit_code == 2);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("adjust /nonexistent.alb").exit_code == 2);
    CHECK(run_cli("adjust " + instance_path("hoffman9.alb") + " --p1 2.0").exit_code == 2);
    CHECK(run_cli("adjust " + instance_path("hoffman9.alb") + " --p2 1.0").exit_code == 2);
    CHECK(run_cli("balance " + instance_path("hoffman9.alb") +
                  " --method bogus --cycle-per-unit 1")
              .exit_code == 2);
    CHECK(run_cli("simulate " + instance_path("hoffman9.alb") +
                  " --cycle-per-unit 2 --runs 0")
              .exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("balance --help").exit_code == 0);
}

TEST_CASE("simulate prints a summary report") {
    const CliResult r = run_cli("simulate " + instance_path("shirt15.alb") +
                                " --method moodie-young --cycle-per-lot 200 --runs 20 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "stations: 3"));
    CHECK(contains(r.output, "runs: 20"));
    CHECK(contains(r.output, "seed: 1"));
    CHECK(contains(r.output, "time efficiency:"));
    CHECK(contains(r.output, "yield efficiency:"));
    CHECK(contains(r.output, "overall efficiency:"));
    CHECK(contains(r.output, "mean idle per station (min): WS1 "));
}

TEST_CASE("simulate CSV replays byte-identically") {
    const std::string args = "simulate " + instance_path("shirt15.alb") +
                             " --method moodie-young --cycle-per-lot 200 --runs 20 --seed 9"
                             " --format csv";
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    const auto lines = split_lines(first.output);
    REQUIRE(lines.size() == 21);
    CHECK(lines[0] == "run,time_eff,yield_eff,efficiency,idle_minutes,output_units");
    CHECK(split_fields(lines[1]).size() == 6);

    const CliResult threaded = run_cli(args + " --threads 4");
    CHECK(threaded.output == first.output);
}

TEST_CASE("sweep writes the CSV and reports the near-best set") {
    const std::string csv_path = "/tmp/linebal-cli-sweep-test.csv";
    std::remove(csv_path.c_str());
    const CliResult r = run_cli("sweep " + instance_path("shirt15.alb") +
                                " --method moodie-young --cycle-per-lot 200 --grid-step 0.45"
                                " --runs 3 --seed 7 --out " +
                                csv_path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "grid points: 9"));
    CHECK(contains(r.output, "feasible points: 9"));
    CHECK(contains(r.output, "best efficiency: "));
    CHECK(contains(r.output, "within one standard error of the best:"));

    std::ifstream in(csv_path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto lines = split_lines(buffer.str());
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "p1,p2,stations,time_eff,yield_eff,eff_mean,eff_std,feasible");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(split_fields(lines[i]).size() == 8);
    }
    std::remove(csv_path.c_str());
}

TEST_CASE("an unwritable sweep target exits with code 4") {
    const CliResult r = run_cli("sweep " + instance_path("shirt15.alb") +
                                " --cycle-per-lot 200 --grid-step 0.45 --runs 2"
                                " --out /nonexistent-dir/surface.csv");
    CHECK(r.exit_code == 4);
}

TEST_CASE("matrix prints the dotted precedence grid") {
    const CliResult r = run_cli("matrix " + instance_path("hoffman9.alb"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "tasks: 9"));
    CHECK(contains(r.output, "   1  .  1  1  .  .  .  .  .  ."));
    CHECK(contains(r.output, "   4  .  .  .  .  1  1  1  .  ."));
    CHECK(contains(r.output, "   9  .  .  .  .  .  .  .  .  ."));
}

TEST_CASE("a missing subcommand is a usage error") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate x.alb").exit_code == 2);
}
