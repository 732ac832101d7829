#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgroup {

/// Every failure the library reports. Names are stable and surface verbatim in
/// the CLI error document.
enum class ErrorCode {
    NegativeParameter,
    InvalidPeriod,
    InvalidInertia,
    DomainError,
    TrivialGroupInput,
    ClassificationGap,
    EmptyInput,
    MalformedHom,
    NonSurjective,
    NonIntegralGenus,
    BoundExceeded,
    IdentityCover,
    WrongShape,
    PerfectInput,
    TrivialInput,
    NotAffine,
    ZeroOneObstruction,
    HasTorsion,
    AbelianShape,
};

constexpr std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NegativeParameter: return "NegativeParameter";
    case ErrorCode::InvalidPeriod: return "InvalidPeriod";
    case ErrorCode::InvalidInertia: return "InvalidInertia";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TrivialGroupInput: return "TrivialGroupInput";
    case ErrorCode::ClassificationGap: return "ClassificationGap";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MalformedHom: return "MalformedHom";
    case ErrorCode::NonSurjective: return "NonSurjective";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::IdentityCover: return "IdentityCover";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::PerfectInput: return "PerfectInput";
    case ErrorCode::TrivialInput: return "TrivialInput";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::ZeroOneObstruction: return "ZeroOneObstruction";
    case ErrorCode::HasTorsion: return "HasTorsion";
    case ErrorCode::AbelianShape: return "AbelianShape";
    }
    return "Unknown";
}

/// Input-validation failures, as opposed to domain refusals.
constexpr bool is_validation_error(ErrorCode code) noexcept
{
    return code == ErrorCode::NegativeParameter || code == ErrorCode::InvalidPeriod
        || code == ErrorCode::InvalidInertia || code == ErrorCode::EmptyInput
        || code == ErrorCode::MalformedHom;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail)
        , code_(code)
        , detail_(detail)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail)
{
    throw Error(code, detail);
}

} // namespace fgroup
