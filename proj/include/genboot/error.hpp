#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace genboot {

enum class ErrorCode {
    OutOfBounds,
    InvalidAction,
    InvalidArgument,
    EmptyLog,
    EmptyLanguage,
    EmptyData,
    NoConvergence,
    InvalidSite,
    AllFiltered,
    Unreachable,
    RetryExhausted,
    Parse,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every module. The code identifies the violated
/// precondition; what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    /// what() without the leading error-code name.
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

/// Malformed log or DFG input. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace genboot
