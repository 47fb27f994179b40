#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace galois {

enum class ErrorKind {
  MalformedTable,
  NonAssociative,
  BadIdentity,
  BadInverse,
  SizeCapExceeded,
  NotASubgroup,
  NotAHomomorphism,
  MonoidActorUnsupported,
  PointOutOfRange,
  ActorMismatch,
  InvalidAction,
  NotByAutomorphisms,
  ArrowNotInCategory,
  InvalidCategory,
  NoImageObject,
  AxiomPrereqFailed,
  NoMeet,
  NotGalois,
  InvalidSystem,
  QuotientMissing,
  CoproductMissing,
  Disconnected,
  InvalidGraph,
  ParseError,
  FileNotFound,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::BadInverse: return "BadInverse";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::MonoidActorUnsupported: return "MonoidActorUnsupported";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::ActorMismatch: return "ActorMismatch";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotByAutomorphisms: return "NotByAutomorphisms";
    case ErrorKind::ArrowNotInCategory: return "ArrowNotInCategory";
    case ErrorKind::InvalidCategory: return "InvalidCategory";
    case ErrorKind::NoImageObject: return "NoImageObject";
    case ErrorKind::AxiomPrereqFailed: return "AxiomPrereqFailed";
    case ErrorKind::NoMeet: return "NoMeet";
    case ErrorKind::NotGalois: return "NotGalois";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::QuotientMissing: return "QuotientMissing";
    case ErrorKind::CoproductMissing: return "CoproductMissing";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FileNotFound: return "FileNotFound";
  }
  return "Unknown";
}

// Every failure in the library is an Error. The witness holds the indices
// that make the failure checkable (a triple for NonAssociative, a point for
// PointOutOfRange, line/column for ParseError, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace galois
