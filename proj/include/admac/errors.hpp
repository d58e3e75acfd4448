#pragma once

#include <stdexcept>
#include <string>

namespace admac {

enum class ErrorCode {
    BoundViolation,
    SchemaMismatch,
    UnknownComponent,
    UnknownName,
    UnknownAction,
    SpreadTooLarge,
    ZeroBaseline,
    NotZeroSum,
    DimensionMismatch,
    DegenerateTree,
    NotFiscalStrength,
    DivideByZero,
    NonFiniteValue,
    SingularSystem,
    ParseError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BoundViolation: return "BoundViolation";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::UnknownComponent: return "UnknownComponent";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::UnknownAction: return "UnknownAction";
        case ErrorCode::SpreadTooLarge: return "SpreadTooLarge";
        case ErrorCode::ZeroBaseline: return "ZeroBaseline";
        case ErrorCode::NotZeroSum: return "NotZeroSum";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DegenerateTree: return "DegenerateTree";
        case ErrorCode::NotFiscalStrength: return "NotFiscalStrength";
        case ErrorCode::DivideByZero: return "DivideByZero";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// All engine failures surface as a single exception type carrying a code,
/// so callers (CLI, tests) can branch on the condition rather than parse text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace admac
