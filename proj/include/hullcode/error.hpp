#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullcode {

enum class Errc {
    NotPrime,
    NotPrimePower,
    SizeCapExceeded,
    DivisionByZero,
    FieldMismatch,
    LengthMismatch,
    ShapeMismatch,
    ZeroTarget,
    BaseNotPrimitive,
    WrongCharacteristic,
    WrongResidueClass,
    NoSquareRootOfMinusOne,
    NoSolution,
    RankDeficient,
    EnumerationCapExceeded,
    InternalInconsistency,
    InvalidParams,
    SearchExhausted,
    VerificationFailed,
    HypothesisViolated,
    DomainError,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotPrimePower: return "NotPrimePower";
        case Errc::SizeCapExceeded: return "SizeCapExceeded";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::ZeroTarget: return "ZeroTarget";
        case Errc::BaseNotPrimitive: return "BaseNotPrimitive";
        case Errc::WrongCharacteristic: return "WrongCharacteristic";
        case Errc::WrongResidueClass: return "WrongResidueClass";
        case Errc::NoSquareRootOfMinusOne: return "NoSquareRootOfMinusOne";
        case Errc::NoSolution: return "NoSolution";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::InvalidParams: return "InvalidParams";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::DomainError: return "DomainError";
    }
    return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the failure class,
/// `what()` carries a human-readable message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace hullcode
