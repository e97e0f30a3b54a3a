#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minppr {

enum class ErrorCode {
    IndexOutOfRange,
    EmptyInput,
    InvalidRankVector,
    MultipleEssentialClasses,
    NonConvergence,
    Inconsistent,
    AllZeroMin,
    AllZeroMedian,
    EvenCount,
    IncoherentCenters,
    EmptyTrustedSet,
    LengthMismatch,
    MixingTimeout,
    DegenerateCost,
    InvalidBase,
    InvalidScenario,
    TrustedPurchase,
    TooSmall,
    MissingEdge,
    BadParams,
    UnknownSuite,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidRankVector: return "InvalidRankVector";
    case ErrorCode::MultipleEssentialClasses: return "MultipleEssentialClasses";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::AllZeroMin: return "AllZeroMin";
    case ErrorCode::AllZeroMedian: return "AllZeroMedian";
    case ErrorCode::EvenCount: return "EvenCount";
    case ErrorCode::IncoherentCenters: return "IncoherentCenters";
    case ErrorCode::EmptyTrustedSet: return "EmptyTrustedSet";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MixingTimeout: return "MixingTimeout";
    case ErrorCode::DegenerateCost: return "DegenerateCost";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::TrustedPurchase: return "TrustedPurchase";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Failures that come from the numerics rather than from malformed input.
/// The CLI maps these to exit status 2 and everything else to 1.
constexpr bool is_computational(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::MultipleEssentialClasses:
    case ErrorCode::NonConvergence:
    case ErrorCode::Inconsistent:
    case ErrorCode::AllZeroMin:
    case ErrorCode::AllZeroMedian:
    case ErrorCode::MixingTimeout:
    case ErrorCode::DegenerateCost:
        return true;
    default:
        return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace minppr
