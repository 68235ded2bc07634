#pragma once

#include <stdexcept>
#include <string>

namespace cdc {

// Violated data invariant (bad skeleton file, distance violation, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A BoundExpression referenced a base bound the registry does not hold.
struct UnresolvedReference : std::runtime_error {
    explicit UnresolvedReference(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cdc
