#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Error categories that surface through the C API as status codes.
enum class ErrorCode {
    Internal = 1,
    Schema = 2,
    Budget = 3,
    Domain = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(ErrorCode::Domain, msg) {}
};

class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(ErrorCode::Schema, msg) {}
};

// Raised when a configurable pair/degree/point budget is exhausted.
// Never a silent truncation.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(ErrorCode::Budget, msg) {}
};

}  // namespace toric
