#pragma once

#include <stdexcept>
#include <string>

namespace lcdring {

/// Machine-readable classification of domain failures.
enum class ErrorCode {
    InvalidArgument,
    NotPrime,
    ReducibleModulus,
    FieldMismatch,
    DivisionByZero,
    NotADivisor,
    NotGrayMatrix,
    GammaNotSquare,
    SearchExhausted,
    BudgetExceeded,
    ParseError,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every library failure is reported as an Error carrying an ErrorCode.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lcdring
