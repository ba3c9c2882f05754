#pragma once

#include <stdexcept>
#include <string>

namespace actres {

/// Base for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A line of an input file does not match its grammar. Line numbers are 1-based.
struct ParseError : Error {
    int line = 0;
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// Semantically invalid input (unknown phase, self-loop constraint, missing composite, ...).
struct InputError : Error {
    using Error::Error;
};

/// The constraint system cannot be realized: target-cycle overshoot, a schedule
/// arc violation, or nodes unreachable from the reference edge.
struct InfeasibleError : Error {
    using Error::Error;
};

} // namespace actres
