#pragma once

#include <stdexcept>
#include <string>

namespace preserver {

// Thrown when a run would exceed its configured search budget
// (node caps, graph-space caps, unsupported problem sizes).
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an input file or serialized form cannot be parsed.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace preserver
