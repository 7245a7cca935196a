#include "iwasawa/error.hpp"

namespace iwasawa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidGroup: return "invalid-group";
    case ErrorCode::RepeatedPrimes: return "repeated-primes";
    case ErrorCode::InvalidTuple: return "invalid-tuple";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::InexactDivision: return "inexact-division";
    case ErrorCode::PrimeMismatch: return "prime-mismatch";
    case ErrorCode::HasseBound: return "hasse-bound";
    case ErrorCode::EvenPrime: return "even-prime";
    case ErrorCode::InconsistentRanks: return "inconsistent-ranks";
    case ErrorCode::NegativeCorank: return "negative-corank";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::MissingTupleRow: return "missing-tuple-row";
    case ErrorCode::NonMonotoneRanks: return "non-monotone-ranks";
    case ErrorCode::HypothesisField: return "hypothesis-field";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::MalformedShape: return "malformed-shape";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::Network: return "network";
    case ErrorCode::Protocol: return "protocol";
    case ErrorCode::OfflineMiss: return "offline-miss";
    case ErrorCode::BadReduction: return "bad-reduction";
    case ErrorCode::MissingAp: return "missing-ap";
  }
  return "unknown";
}

}  // namespace iwasawa
