#include "linebal/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "linebal/num_text.hpp"

namespace linebal {

namespace {

std::string strip(const std::string& raw) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::string join_lines(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += "\n";
        out += item;
    }
    return out;
}

class Parser {
public:
    Parser(std::istream& in, const std::string& filename) : in_(in), filename_(filename) {}

    Instance run() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++lineno_;
            const std::string line = strip(raw);
            if (line.empty()) continue;
            if (line == "tasks:") {
                if (section_ != Section::header) fail("unexpected 'tasks:' section");
                section_ = Section::tasks;
                continue;
            }
            if (line == "edges:") {
                if (section_ != Section::tasks) fail("'edges:' must follow the tasks section");
                section_ = Section::edges;
                continue;
            }
            switch (section_) {
                case Section::header: header_line(line); break;
                case Section::tasks: task_line(line); break;
                case Section::edges: edge_line(line); break;
            }
        }
        if (!have_lot_) issues_.push_back(filename_ + ": missing required header 'lot_size:'");
        if (section_ == Section::header) {
            issues_.push_back(filename_ + ": missing 'tasks:' section");
        }
        if (!issues_.empty()) throw ParseError(std::move(issues_));

        std::sort(instance_.edges.begin(), instance_.edges.end());
        instance_.edges.erase(std::unique(instance_.edges.begin(), instance_.edges.end()),
                              instance_.edges.end());
        return std::move(instance_);
    }

private:
    enum class Section { header, tasks, edges };

    void fail(const std::string& message) {
        issues_.push_back(filename_ + ":" + std::to_string(lineno_) + ": " + message);
    }

    void header_line(const std::string& line) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            fail("expected 'key: value' before the tasks section");
            return;
        }
        const std::string key = strip(line.substr(0, colon));
        const std::string value = strip(line.substr(colon + 1));
        if (key == "name") {
            instance_.name = value;
        } else if (key == "lot_size") {
            int lot = 0;
            if (!parse_int_text(value, lot)) {
                fail("lot_size must be an integer, got '" + value + "'");
                return;
            }
            instance_.lot_size = lot;
            have_lot_ = true;
        } else if (key == "provenance") {
            instance_.provenance = value;
        } else {
            fail("unknown header key '" + key + "'");
        }
    }

    void task_line(const std::string& line) {
        const auto tokens = split_ws(line);
        if (tokens.size() != 6) {
            fail("task line needs 6 fields "
                 "(id mean_proc sd_proc mean_dismantle sd_dismantle mean_defects_per_lot), got " +
                 std::to_string(tokens.size()));
            return;
        }
        TaskSpec task;
        double fields[5] = {};
        bool ok = parse_int_text(tokens[0], task.id);
        for (int i = 0; i < 5 && ok; ++i) {
            ok = parse_double_text(tokens[i + 1], fields[i]);
        }
        if (!ok) {
            fail("task line has a malformed number: '" + line + "'");
            return;
        }
        task.proc = {fields[0], fields[1]};
        task.dismantle = {fields[2], fields[3]};
        task.mean_defects_per_lot = fields[4];
        instance_.tasks.push_back(task);
    }

    void edge_line(const std::string& line) {
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            fail("edge line must look like '<pred> -> <succ>'");
            return;
        }
        int pred = 0, succ = 0;
        if (!parse_int_text(strip(line.substr(0, arrow)), pred) ||
            !parse_int_text(strip(line.substr(arrow + 2)), succ)) {
            fail("edge endpoints must be integers: '" + line + "'");
            return;
        }
        instance_.edges.emplace_back(pred, succ);
    }

    std::istream& in_;
    std::string filename_;
    int lineno_ = 0;
    Section section_ = Section::header;
    Instance instance_;
    bool have_lot_ = false;
    std::vector<std::string> issues_;
};

}  // namespace

ParseError::ParseError(std::vector<std::string> issues)
    : std::runtime_error(join_lines(issues)), issues_(std::move(issues)) {}

Instance parse_instance(std::istream& in, const std::string& filename) {
    return Parser(in, filename).run();
}

Instance parse_instance_text(const std::string& text, const std::string& filename) {
    std::istringstream in(text);
    return parse_instance(in, filename);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError({path + ": cannot open file"});
    }
    Instance instance = parse_instance(in, path);
    validate_or_throw(instance);
    return instance;
}

std::string serialize_instance(const Instance& instance) {
    std::string out;
    out += "name: " + instance.name + "\n";
    out += "lot_size: " + std::to_string(instance.lot_size) + "\n";
    if (instance.provenance) {
        out += "provenance: " + *instance.provenance + "\n";
    }
    out += "tasks:\n";
    for (const auto& t : instance.tasks) {
        out += std::to_string(t.id) + " " + double_text(t.proc.mean) + " " +
               double_text(t.proc.sd) + " " + double_text(t.dismantle.mean) + " " +
               double_text(t.dismantle.sd) + " " + double_text(t.mean_defects_per_lot) + "\n";
    }
    out += "edges:\n";
    auto edges = instance.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
        out += std::to_string(e.first) + " -> " + std::to_string(e.second) + "\n";
    }
    return out;
}

}  // namespace linebal
