#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycidx {

enum class ErrorKind {
    NonzeroConstantTerm,
    ConstantTermNotOne,
    PrecisionExceeded,
    InnerConstantTerm,
    ZeroEvaluationPoint,
    InvalidK,
    InvalidParams,
    TooLarge,
    ShapeMismatch,
    InvalidRange,
    ArityMismatch,
    NonIntegralMultiplicity,
    NegativeMultiplicity,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::InnerConstantTerm: return "InnerConstantTerm";
    case ErrorKind::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), m_kind(kind)
    {
    }

    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

} // namespace cycidx
