#pragma once

#include <p5hom/instance.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace p5hom {

/// Malformed instance or solution text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & what);
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

/// Line-based instance text, ids and colors 1-based:
///
///     H <k>
///     HEDGE <a> <b>
///     G <n>
///     GEDGE <u> <v>
///     WT <u> <int|p/q|decimal>
///     LIST <u> [<c> ...]
///
/// H must come before G and both before any edge, weight or list line. '#' starts a comment.
/// Missing weights default to 1 and missing lists to all colors. Repeated edges are harmless.
Instance parse_instance(std::string_view text);

/// Canonical text: edges sorted, WT only for weights other than 1, LIST only for partial lists.
std::string serialize_instance(const Instance & inst);

/// "weight p/q" followed by one "vertex <id> <color>" line per chosen vertex.
std::string serialize_solution(const Solution & sol);

/// Reads a solution for `inst`. The weight line is taken as written; verify_solution decides
/// whether it is right.
Solution parse_solution(std::string_view text, const Instance & inst);

/// 64-bit FNV-1a of the canonical text as 16 hex digits.
std::string instance_digest(const Instance & inst);

std::string read_file(const std::string & path);
void write_file(const std::string & path, std::string_view contents);

}
