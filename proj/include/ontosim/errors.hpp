#pragma once

#include <stdexcept>
#include <string>

namespace ontosim {

// Every failure the library raises carries one of these kinds. The CLI maps
// kinds to exit-code families: parse/ingestion = 2, structural = 3,
// unknown entity = 4, statistics = 5.
enum class ErrorKind {
  Parse,
  MissingCorpus,
  EmptyCorpus,
  DuplicateResourceId,
  Structure,
  Cycle,
  DegenerateTaxonomy,
  EmptyVector,
  UnknownConcept,
  UnknownResource,
  ZeroVariance,
  ConstantVector,
  LengthMismatch,
  TooFewResources,
  CorpusTooSmall,
  ZeroIdfSum,
  UndefinedIdf,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string entity = {})
      : std::runtime_error(message), kind_(kind), entity_(std::move(entity)) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Offending entity id (concept, resource, ...) when one exists.
  const std::string& entity() const noexcept { return entity_; }

  const char* kind_name() const noexcept;
  int exit_code() const noexcept;

 private:
  ErrorKind kind_;
  std::string entity_;
};

inline const char* Error::kind_name() const noexcept {
  switch (kind_) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::MissingCorpus: return "MissingCorpus";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::DuplicateResourceId: return "DuplicateResourceId";
    case ErrorKind::Structure: return "StructureError";
    case ErrorKind::Cycle: return "CycleError";
    case ErrorKind::DegenerateTaxonomy: return "DegenerateTaxonomy";
    case ErrorKind::EmptyVector: return "EmptyVector";
    case ErrorKind::UnknownConcept: return "UnknownConcept";
    case ErrorKind::UnknownResource: return "UnknownResource";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::ConstantVector: return "ConstantVector";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooFewResources: return "TooFewResources";
    case ErrorKind::CorpusTooSmall: return "CorpusTooSmall";
    case ErrorKind::ZeroIdfSum: return "ZeroIDFSum";
    case ErrorKind::UndefinedIdf: return "UndefinedIDF";
  }
  return "Error";
}

inline int Error::exit_code() const noexcept {
  switch (kind_) {
    case ErrorKind::Parse:
    case ErrorKind::MissingCorpus:
    case ErrorKind::EmptyCorpus:
    case ErrorKind::DuplicateResourceId:
      return 2;
    case ErrorKind::Structure:
    case ErrorKind::Cycle:
    case ErrorKind::DegenerateTaxonomy:
    case ErrorKind::EmptyVector:
      return 3;
    case ErrorKind::UnknownConcept:
    case ErrorKind::UnknownResource:
      return 4;
    case ErrorKind::ZeroVariance:
    case ErrorKind::ConstantVector:
    case ErrorKind::LengthMismatch:
    case ErrorKind::TooFewResources:
    case ErrorKind::CorpusTooSmall:
    case ErrorKind::ZeroIdfSum:
    case ErrorKind::UndefinedIdf:
      return 5;
  }
  return 1;
}

}  // namespace ontosim
