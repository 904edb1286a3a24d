#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leavitt {

enum class ErrorKind {
  SourceVertex,
  Mismatch,
  NotComposable,
  NotACycle,
  MixedRings,
  SourceMismatch,
  NotDiagonal,
  NotANormalizer,
  InconsistentAction,
  OutsideDomain,
  MalformedCompression,
  NotZeroGraded,
  NotEventuallyPeriodic,
  NotIdempotent,
  NoStabilization,
  NotValidated,
  NotAHomomorphism,
  Parse,
  Invalid,
};

std::string_view to_string(ErrorKind kind);

//! Every failure raised by the library. The kind is the stable part; the
//! message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace leavitt
