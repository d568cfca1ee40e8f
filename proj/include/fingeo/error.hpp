#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fingeo {

enum class Errc {
  NotPrime,
  NotIrreducible,
  DegreeMismatch,
  DivisionByZero,
  NotADivisor,
  SpecMismatch,
  ZeroPolynomial,
  NotFullyReducible,
  DegreeTooLarge,
  PreconditionViolated,
  EqualArguments,
  NoTangent,
  NotNormalized,
  ParityError,
  OutOfRange,
  NotBlocking,
  HypothesisViolated,
  NotSquare,
  BadIndex,
  SizeBoundViolated,
  DegenerateForm,
  WrongSize,
  OddCharacteristic,
  NotAnArc,
  NoCommonNucleus,
  NotAnExtension,
  TooLarge,
  NotScattered,
  WrongDimension,
  NotExhausted,
  WitnessFound,
  ParseError,
  UsageError,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotFullyReducible: return "NotFullyReducible";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::EqualArguments: return "EqualArguments";
    case Errc::NoTangent: return "NoTangent";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::ParityError: return "ParityError";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotBlocking: return "NotBlocking";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotSquare: return "NotSquare";
    case Errc::BadIndex: return "BadIndex";
    case Errc::SizeBoundViolated: return "SizeBoundViolated";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::WrongSize: return "WrongSize";
    case Errc::OddCharacteristic: return "OddCharacteristic";
    case Errc::NotAnArc: return "NotAnArc";
    case Errc::NoCommonNucleus: return "NoCommonNucleus";
    case Errc::NotAnExtension: return "NotAnExtension";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotScattered: return "NotScattered";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NotExhausted: return "NotExhausted";
    case Errc::WitnessFound: return "WitnessFound";
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fingeo
