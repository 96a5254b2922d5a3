#pragma once

#include <stdexcept>
#include <string>

namespace holdercover {

// Bad input: malformed numbers, violated preconditions, unreadable files.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource limit was hit (point budget, precision, output path).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

class PrecisionError : public BudgetError {
public:
    explicit PrecisionError(const std::string& what) : BudgetError(what) {}
};

}  // namespace holdercover
