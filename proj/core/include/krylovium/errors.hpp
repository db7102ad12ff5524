#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace krylovium {

// Thrown when an operation mixes values living in different prime fields.
class ModulusMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZeroError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Carries the rank that the elimination reached before giving up.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, std::size_t rank_found)
        : std::runtime_error(what + " (rank found: " + std::to_string(rank_found) + ")"),
          rank_found_(rank_found) {}

    std::size_t rank_found() const { return rank_found_; }

private:
    std::size_t rank_found_;
};

class RankDeficiencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text-format parse failure; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace krylovium
