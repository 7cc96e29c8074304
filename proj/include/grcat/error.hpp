#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace grcat {

enum class Errc {
  NotClosed,
  NoIdentityAtZero,
  NotAssociative,
  NoInverse,
  NotAHomomorphism,
  DegreeTooHigh,
  CapExceeded,
  NotACocycle,
  NotEquivariant,
  ObstructionNonzero,
  SourceTargetMismatch,
  NotNormalized,
  NotAbelianCocycle,
  RealizationMismatch,
  PsiNotIntoPi0,
  Pi0NotFinite,
  FactorSetInvalid,
  IncompatibleKernels,
  MismatchFound,
  ParseError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotClosed: return "NotClosed";
    case Errc::NoIdentityAtZero: return "NoIdentityAtZero";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::ObstructionNonzero: return "ObstructionNonzero";
    case Errc::SourceTargetMismatch: return "SourceTargetMismatch";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotAbelianCocycle: return "NotAbelianCocycle";
    case Errc::RealizationMismatch: return "RealizationMismatch";
    case Errc::PsiNotIntoPi0: return "PsiNotIntoPi0";
    case Errc::Pi0NotFinite: return "Pi0NotFinite";
    case Errc::FactorSetInvalid: return "FactorSetInvalid";
    case Errc::IncompatibleKernels: return "IncompatibleKernels";
    case Errc::MismatchFound: return "MismatchFound";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

/// Library error carrying a machine-readable code and an optional witness
/// (element indices or tuple entries relevant to the violated condition).
class Error : public std::runtime_error {
 public:
  Errc code;
  std::string detail;  // message without the code prefix
  std::vector<long long> witness;

  Error(Errc c, const std::string& msg, std::vector<long long> w = {})
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg),
        code(c),
        detail(msg),
        witness(std::move(w)) {}
};

[[noreturn]] inline void internal_error(const std::string& msg) {
  throw Error(Errc::Internal, msg);
}

}  // namespace grcat
