#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace om {

enum class Errc {
  LengthMismatch,
  EmptyInput,
  NotGraded,
  NotEssential,
  ZeroNormal,
  DegenerateChirotope,
  NotAlternating,
  AxiomFailure,
  SearchBudgetExceeded,
  NotAntisymmetric,
  NotTransitive,
  NotReflexive,
  InvalidCell,
  InvalidComplex,
  ConsistencyFailure,
  Disconnected,
  NotATope,
  EquivalenceViolation,
  ComparisonFailure,
  ParseError,
  UnknownFixture,
  SizeLimit,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above; the
/// message holds the witness in human-readable form.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace om
