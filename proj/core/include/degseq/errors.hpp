#pragma once

#include <stdexcept>
#include <string>

namespace degseq {

/// Thrown when a degree target makes the ML equations unsatisfiable at
/// finite parameters (some d_i <= 0 or d_i >= n-1).
class infeasible_degrees_error : public std::runtime_error {
public:
    explicit infeasible_degrees_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Input file could not be parsed; carries a 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace degseq
