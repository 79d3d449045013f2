#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

// Invalid argument values (bad subsets, malformed partition text, ...).
struct argument_error : std::invalid_argument {
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Dimension mismatches between composable objects.
struct shape_error : std::invalid_argument {
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input exceeds a hard size bound of an operation (k out of range, ...).
struct size_error : std::length_error {
    explicit size_error(const std::string& what) : std::length_error(what) {}
};

// A computation would exceed the configured memory budget.
struct budget_error : std::length_error {
    explicit budget_error(const std::string& what) : std::length_error(what) {}
};

// Evaluation at an integer N0 where a denominator vanishes.
struct specialization_error : std::domain_error {
    explicit specialization_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qpc
