#pragma once

#include <stdexcept>
#include <string>

namespace algknot {

enum class Errc {
  MalformedText,
  NotIncreasing,
  CharacteristicConditionViolated,
  NotCoprime,
  MultiplicityTooSmall,
  NotCoprimeGenerators,
  QueryBeyondTable,
  OutOfDomain,
  GenusOrderViolated,
  EigenvalueTooCloseToZero,
};

std::string errc_name(Errc code);

/// Rejected user input or a query outside a precondition. CLI exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  InvalidInput(Errc code, const std::string& detail)
      : std::runtime_error(errc_name(code) + ": " + detail), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// A violated internal assertion, e.g. a theorem failing on computed data.
/// Must never be reachable from valid input. CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace algknot
