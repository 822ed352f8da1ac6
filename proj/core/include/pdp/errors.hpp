#pragma once

#include <stdexcept>
#include <string>

namespace pdp {

// Every failure the library can signal, named after the invariant that broke.
// Kinds group the codes for exit-code mapping: input errors are the caller's
// fault, internal errors indicate a bug in the solver itself.
enum class ErrorCode {
  // graph-core
  InconsistentEmbedding,
  SelfLoop,
  DuplicateTerminal,
  TerminalNotOnFace,
  TerminalRepeatsOnBoundary,
  BadCaseTag,
  WeightOutOfRange,
  BadInstanceFile,
  // ring-algebra
  ModulusMismatch,
  DuplicatePoint,
  NonIntegerResult,
  // pairing-calculus
  SharedLabel,
  CrossingPairing,
  // solvers
  SignMismatch,
  NoDualPath,
  // search
  NoSolution,
  InternalInconsistency,
  // edpp
  CrossingDemands,
  // oracle
  InstanceTooLarge,
  BadParams,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InconsistentEmbedding: return "InconsistentEmbedding";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateTerminal: return "DuplicateTerminal";
    case ErrorCode::TerminalNotOnFace: return "TerminalNotOnFace";
    case ErrorCode::TerminalRepeatsOnBoundary: return "TerminalRepeatsOnBoundary";
    case ErrorCode::BadCaseTag: return "BadCaseTag";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::BadInstanceFile: return "BadInstanceFile";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::SharedLabel: return "SharedLabel";
    case ErrorCode::CrossingPairing: return "CrossingPairing";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::NoDualPath: return "NoDualPath";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CrossingDemands: return "CrossingDemands";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "UnknownError";
}

// Exit-code grouping: 1 = no solution / negative decision, 2 = bad input,
// 3 = internal inconsistency.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoSolution:
      return 1;
    case ErrorCode::SignMismatch:
    case ErrorCode::NoDualPath:
    case ErrorCode::NonIntegerResult:
    case ErrorCode::InternalInconsistency:
      return 3;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace pdp
