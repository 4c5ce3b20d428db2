#ifndef SCORESEQ_ERRORS_HPP
#define SCORESEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scoreseq {

// Thrown when a requested table would exceed the configured cell budget.
class CellBudgetExceeded : public std::runtime_error {
public:
    explicit CellBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when exhaustive enumeration is asked for a length beyond the
// configured limit.
class EnumerationLimitExceeded : public std::runtime_error {
public:
    explicit EnumerationLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two independent counting methods disagree. Any occurrence is
// an internal-consistency failure, never a recoverable condition.
class MethodMismatch : public std::logic_error {
public:
    explicit MethodMismatch(const std::string& what) : std::logic_error(what) {}
};

} // namespace scoreseq

#endif
