#pragma once

#include <stdexcept>
#include <string>

namespace slmn {

enum class ErrorCode {
    InvalidSignature,
    InvalidKind,
    LengthMismatch,
    NotEven,
    NotSimple,
    NotOddIsotropic,
    InvalidFamily,
    WrongSystem,
    VariantMismatch,
    NonSymmetricWeight,
    NotSymmetric,
    NotOddPositive,
    WrongCase,
    PslConstraintViolated,
    Parse,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSignature: return "InvalidSignature";
        case ErrorCode::InvalidKind: return "InvalidKind";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotEven: return "NotEven";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::NotOddIsotropic: return "NotOddIsotropic";
        case ErrorCode::InvalidFamily: return "InvalidFamily";
        case ErrorCode::WrongSystem: return "WrongSystem";
        case ErrorCode::VariantMismatch: return "VariantMismatch";
        case ErrorCode::NonSymmetricWeight: return "NonSymmetricWeight";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotOddPositive: return "NotOddPositive";
        case ErrorCode::WrongCase: return "WrongCase";
        case ErrorCode::PslConstraintViolated: return "PslConstraintViolated";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace slmn
