#include "genboot/error.hpp"

namespace genboot {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyLog: return "EmptyLog";
    case ErrorCode::EmptyLanguage: return "EmptyLanguage";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidSite: return "InvalidSite";
    case ErrorCode::AllFiltered: return "AllFiltered";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::Parse: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message)
{
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::Parse, line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line)
{
}

} // namespace genboot
