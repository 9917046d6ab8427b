#pragma once

#include <stdexcept>
#include <string>

namespace fcx {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
struct precondition_error : error {
    using error::error;
};

/// The generator family contains the empty set, i.e. the ideal is the unit
/// ideal; kept separate so callers can recognize the case.
struct unit_ideal_error : precondition_error {
    unit_ideal_error() : precondition_error("generator family contains the empty set (unit ideal)") {}
};

/// Malformed input file; `line` is 1-based, 0 when not tied to a line.
struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what_) : error(what_), line(line_) {}
};

/// Two redundant computation routes disagreed. Always a bug, never a verdict.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace fcx
