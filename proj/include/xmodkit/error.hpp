#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace xmodkit {

enum class ErrorCode {
  MalformedTable,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotHomomorphism,
  NotSubgroup,
  NotNormal,
  BadAction,
  UnknownObject,
  NotGroupoid,
  NotGroupoidMorphism,
  NotCovering,
  AnchorMismatch,
  InvalidAction,
  AdditionNotFunctorial,
  InterchangeFails,
  WrongUnit,
  NotGroupHomAnchor,
  ActionAxiomFails,
  CM1Fails,
  CM2Fails,
  NotAbelian,
  SquareFails,
  EquivarianceFails,
  InternalContradiction,
  WitnessFails,
  DiagramFails,
  NotCrossedModule,
  BaseMismatch,
  NotSubgroupOfKernel,
  PreconditionFails,
  NotTransitiveSource,
  NotIso,
  RoundtripFails,
  CapExceeded,
  IoError,
  NotFound,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::BadAction: return "BadAction";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::NotGroupoid: return "NotGroupoid";
    case ErrorCode::NotGroupoidMorphism: return "NotGroupoidMorphism";
    case ErrorCode::NotCovering: return "NotCovering";
    case ErrorCode::AnchorMismatch: return "AnchorMismatch";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::AdditionNotFunctorial: return "AdditionNotFunctorial";
    case ErrorCode::InterchangeFails: return "InterchangeFails";
    case ErrorCode::WrongUnit: return "WrongUnit";
    case ErrorCode::NotGroupHomAnchor: return "NotGroupHomAnchor";
    case ErrorCode::ActionAxiomFails: return "ActionAxiomFails";
    case ErrorCode::CM1Fails: return "CM1Fails";
    case ErrorCode::CM2Fails: return "CM2Fails";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::SquareFails: return "SquareFails";
    case ErrorCode::EquivarianceFails: return "EquivarianceFails";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::WitnessFails: return "WitnessFails";
    case ErrorCode::DiagramFails: return "DiagramFails";
    case ErrorCode::NotCrossedModule: return "NotCrossedModule";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotSubgroupOfKernel: return "NotSubgroupOfKernel";
    case ErrorCode::PreconditionFails: return "PreconditionFails";
    case ErrorCode::NotTransitiveSource: return "NotTransitiveSource";
    case ErrorCode::NotIso: return "NotIso";
    case ErrorCode::RoundtripFails: return "RoundtripFails";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message carries the witness
/// (offending element, pair or tuple) that made the check fail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& witness)
      : std::runtime_error(std::string(to_string(code)) + ": " + witness), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& witness) {
  throw Error(code, witness);
}

/// Outcome of a check that reports instead of throwing.
struct Verdict {
  bool holds = true;
  std::string witness;

  static Verdict ok() { return {}; }
  static Verdict no(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return holds; }
};

}  // namespace xmodkit
