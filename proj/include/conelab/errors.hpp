#ifndef CONELAB_ERRORS_HPP
#define CONELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conelab {

/// Malformed input (bad JSON shape, unknown names, violated preconditions
/// visible at the interface). CLI exit code 2.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& m) : std::runtime_error(m) {}
};

/// A requested computation exceeds its configured budget. CLI exit code 3.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

/// An internal invariant failed to hold. CLI exit code 4.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& m) : std::logic_error(m) {}
};

}  // namespace conelab

#endif
