#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "linebal/model.hpp"

namespace linebal {

/// Parse failure; one line-numbered message per problem found.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<std::string> issues);

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// Reads the plain-text instance format:
///
///   name: <text>                # optional, defaults to ""
///   lot_size: <positive int>    # required
///   provenance: <free text>     # optional
///   tasks:
///   <id> <mean_proc> <sd_proc> <mean_dismantle> <sd_dismantle> <mean_defects_per_lot>
///   edges:
///   <pred> -> <succ>
///
/// '#' starts a comment anywhere on a line; blank lines are skipped;
/// unknown header keys are rejected. Edges are sorted and deduplicated
/// on input, so parse(serialize(x)) == x for any valid x.
Instance parse_instance(std::istream& in, const std::string& filename = "<input>");
Instance parse_instance_text(const std::string& text, const std::string& filename = "<input>");

/// Parses and validates a file; ParseError for unreadable or malformed
/// files, ValidationError for semantic violations.
Instance load_instance(const std::string& path);

/// Canonical text form: headers, tasks in stored order, sorted edges.
/// Numbers round-trip exactly; LF line endings.
std::string serialize_instance(const Instance& instance);

}  // namespace linebal
