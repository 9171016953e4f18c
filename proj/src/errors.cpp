#include "errors.hpp"

namespace hfl {

const char* err_name(Err e) {
  switch (e) {
    case Err::Schema: return "SchemaError";
    case Err::Parity: return "ParityError";
    case Err::NonUnitAugmentation: return "NonUnitAugmentation";
    case Err::HalfIntegralExponent: return "HalfIntegralExponent";
    case Err::NotLSpaceKnotSeries: return "NotLSpaceKnotSeries";
    case Err::NotLSpaceLinkData: return "NotLSpaceLinkData";
    case Err::EmptyPolytope: return "EmptyPolytope";
    case Err::InconsistentSquare: return "InconsistentSquare";
    case Err::UnresolvableD2: return "UnresolvableD2";
    case Err::NotSplitInput: return "NotSplitInput";
    case Err::TrivialComponent: return "TrivialComponent";
    case Err::NegativeNorm: return "NegativeNorm";
    case Err::EmptySupport: return "EmptySupport";
    case Err::WindowTooSmall: return "WindowTooSmall";
    case Err::VerificationFailed: return "VerificationFailed";
    case Err::ZeroAlexander: return "ZeroAlexander";
    case Err::TruncationTooSmall: return "TruncationTooSmall";
    case Err::UnknownName: return "UnknownName";
    case Err::Io: return "IoError";
    case Err::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace hfl
