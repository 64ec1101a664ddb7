#pragma once

#include <stdexcept>
#include <string>

namespace hopfchi {

// Input object failed structural validation (bad document, subset out of
// range, malformed building set, ...). CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured step budget. CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes disagreed. CLI exit code 4.
class DisagreementError : public std::runtime_error {
public:
    explicit DisagreementError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfchi
