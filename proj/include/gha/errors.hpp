#pragma once

#include <stdexcept>
#include <string>

namespace gha {

enum class ErrorCode {
    NonCrystallographic,
    NotClosedUnderReflection,
    InexactDivision,
    NotDivisible,
    NotHomogeneous,
    NotInvariant,
    Resonant,
    MismatchedAlgebra,
    NonCommutingInput,
    QuotientDimensionMismatch,
    ParameterMismatch,
    SingularParameter,
    DimensionTooLarge,
    StepUnstable,
    PoleAt,
    SupportNotCompact,
    GridMismatch,
    BadConfig,
    UnknownSuite,
    IoError,
    DivisionByZero,
    NumericInstability,
    InvalidArgument,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::NonCrystallographic: return "NonCrystallographic";
    case ErrorCode::NotClosedUnderReflection: return "NotClosedUnderReflection";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::Resonant: return "Resonant";
    case ErrorCode::MismatchedAlgebra: return "MismatchedAlgebra";
    case ErrorCode::NonCommutingInput: return "NonCommutingInput";
    case ErrorCode::QuotientDimensionMismatch: return "QuotientDimensionMismatch";
    case ErrorCode::ParameterMismatch: return "ParameterMismatch";
    case ErrorCode::SingularParameter: return "SingularParameter";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::StepUnstable: return "StepUnstable";
    case ErrorCode::PoleAt: return "PoleAt";
    case ErrorCode::SupportNotCompact: return "SupportNotCompact";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NumericInstability: return "NumericInstability";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

} // namespace gha
