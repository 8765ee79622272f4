#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qjt {

enum class Errc {
  MalformedLine,
  SelfLoop,
  IndexOutOfRange,
  EmptyInput,
  UnsupportedHeader,
  NonSquare,
  MissingMagic,
  FaceArityTooSmall,
  TruncatedFile,
  UnknownFormat,
  Io,
  EmptyGraph,
  NotSymmetric,
  NotADensity,
  NotPositiveSemidefinite,
  ConvergenceFailure,
  DimensionMismatch,
  InvalidWeights,
  InvalidAlpha,
  NonPositiveArgument,
  InvalidArgument,
  NumericalFailure,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qjt
