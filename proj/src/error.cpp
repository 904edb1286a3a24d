#include "leavitt/error.hpp"

namespace leavitt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SourceVertex: return "SourceVertex";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotANormalizer: return "NotANormalizer";
    case ErrorKind::InconsistentAction: return "InconsistentAction";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::MalformedCompression: return "MalformedCompression";
    case ErrorKind::NotZeroGraded: return "NotZeroGraded";
    case ErrorKind::NotEventuallyPeriodic: return "NotEventuallyPeriodic";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NotValidated: return "NotValidated";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Invalid: return "Invalid";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace leavitt
