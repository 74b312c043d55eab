#pragma once

#include <stdexcept>
#include <string>

namespace clausen {

// Thrown when a series or quadrature cannot reach the requested tolerance
// within its term/panel budget, or when an evaluation would overflow.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace clausen
