#pragma once

#include <stdexcept>
#include <string>

namespace gint {

/// Stable machine-readable failure codes. The CLI maps each code to the
/// "code" field of its error envelope, so renaming one is a breaking change.
enum class ErrorCode {
    ZeroInput,
    BadModulus,
    NotFound,
    BadParams,
    VIsZero,
    NotSatisfied,
    InternalInconsistency,
    SyntaxError,
    ReservedName,
    UnboundVariable,
    TooLarge,
    BadVariables,
    PreconditionFailed,
    BadInput,
    SuiteFailed,
};

inline const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::BadModulus: return "BadModulus";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::VIsZero: return "VIsZero";
        case ErrorCode::NotSatisfied: return "NotSatisfied";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::ReservedName: return "ReservedName";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BadVariables: return "BadVariables";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::SuiteFailed: return "SuiteFailed";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

  private:
    ErrorCode code_;
};

/// Parse failure with source position (1-based line and column).
class SyntaxError : public Error {
  public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorCode::SyntaxError,
                "syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace gint
