#pragma once

#include <stdexcept>
#include <string>

namespace dsn {

// A parameter outside its documented range (D < 1, r <= 0, bins = 0, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Structurally bad input data (empty trajectory, length mismatch, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Caller broke a documented precondition of a geometric primitive.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// No feasible plan exists under the given constraints.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request exceeds a solver's enumeration or memory budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string key, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", key '" + key + "': " + what),
          line_(line), key_(std::move(key)) {}

    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    int line_;
    std::string key_;
};

} // namespace dsn
