#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwasawa {

enum class ErrorCode {
  InvalidArgument,
  InvalidGroup,
  RepeatedPrimes,
  InvalidTuple,
  LengthMismatch,
  InexactDivision,
  PrimeMismatch,
  HasseBound,
  EvenPrime,
  InconsistentRanks,
  NegativeCorank,
  Schema,
  MissingTupleRow,
  NonMonotoneRanks,
  HypothesisField,
  Precondition,
  MalformedShape,
  NotFound,
  Network,
  Protocol,
  OfflineMiss,
  BadReduction,
  MissingAp,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported as an Error carrying a
/// machine-readable code; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace iwasawa
