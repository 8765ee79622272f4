#include "qjt/error.hpp"

namespace qjt {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::UnsupportedHeader: return "UnsupportedHeader";
    case Errc::NonSquare: return "NonSquare";
    case Errc::MissingMagic: return "MissingMagic";
    case Errc::FaceArityTooSmall: return "FaceArityTooSmall";
    case Errc::TruncatedFile: return "TruncatedFile";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::Io: return "Io";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotADensity: return "NotADensity";
    case Errc::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::NonPositiveArgument: return "NonPositiveArgument";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

}  // namespace qjt
