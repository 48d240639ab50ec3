#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

// Every failure the library can signal deliberately.  Callers (and the CLI
// exit-code mapping) dispatch on the kind, so keep the set small and stable.
enum class ErrorKind {
  Parse,            // malformed input file or option value
  EmptyLanguage,    // forbidden list kills every bi-infinite point
  NonTransitive,    // operation requires a strongly connected presentation
  WindowTooShort,   // word shorter than 2*radius+1 handed to a block map
  Inadmissible,     // word or configuration not in the domain subshift
  CapExceeded,      // a resource cap was hit; message names the cap
  HorizonExceeded,  // iteration budget ran out before a cycle/period was found
  NotE1,            // operation requires an E1 (equicontinuous) classification
  FlankTooShort,    // R(k,m) flank cannot contain an occurrence of B
  EmptySpec,        // R(k,m) has no qualifying words
  BadParam,         // parameter outside its documented range
  HypothesisNotMet, // an experiment's standing hypothesis failed (exit 2)
  Unsupported,      // documented extension point, not implemented
  Internal,         // broken internal invariant; always a bug
};

constexpr const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::EmptyLanguage: return "empty language";
    case ErrorKind::NonTransitive: return "non-transitive space";
    case ErrorKind::WindowTooShort: return "window too short";
    case ErrorKind::Inadmissible: return "inadmissible word";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::HorizonExceeded: return "horizon exceeded";
    case ErrorKind::NotE1: return "not E1";
    case ErrorKind::FlankTooShort: return "flank too short";
    case ErrorKind::EmptySpec: return "empty R(k,m)";
    case ErrorKind::BadParam: return "bad parameter";
    case ErrorKind::HypothesisNotMet: return "hypothesis not met";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Internal: return "internal invariant violated";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace cesaro
