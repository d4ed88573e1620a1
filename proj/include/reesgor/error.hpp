#pragma once

#include <stdexcept>
#include <string>

namespace reesgor {

enum class ErrorKind {
  MixedRing,
  OwnerMismatch,
  ResourceExceeded,
  NotAMember,
  NotDivisible,
  NotParameters,
  NonPositiveWeight,
  NonConnected,
  NotFiniteLength,
  NotArtinian,
  NoStabilization,
  NotContained,
  PairNotFound,
  InternalInconsistency,
  HypothesisNotVerified,
  NotApplicable,
  WrongDimension,
  DepthNotOne,
  EquivalenceViolation,
  Parse,
  InvalidArgument,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MixedRing: return "MixedRing";
    case ErrorKind::OwnerMismatch: return "OwnerMismatch";
    case ErrorKind::ResourceExceeded: return "ResourceExceeded";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotParameters: return "NotParameters";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NonConnected: return "NonConnected";
    case ErrorKind::NotFiniteLength: return "NotFiniteLength";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::PairNotFound: return "PairNotFound";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::HypothesisNotVerified: return "HypothesisNotVerified";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::DepthNotOne: return "DepthNotOne";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; the
/// kind is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace reesgor
