#pragma once

#include <stdexcept>
#include <string>

namespace usched {

// Malformed instance data: cycles, self-arcs, indices out of range.
class InstanceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A solver refused the input because it exceeds a table-size or arithmetic budget.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace usched
