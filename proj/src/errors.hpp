#pragma once

#include <stdexcept>
#include <string>

namespace hfl {

enum class Err {
  Schema,
  Parity,
  NonUnitAugmentation,
  HalfIntegralExponent,
  NotLSpaceKnotSeries,
  NotLSpaceLinkData,
  EmptyPolytope,
  InconsistentSquare,
  UnresolvableD2,
  NotSplitInput,
  TrivialComponent,
  NegativeNorm,
  EmptySupport,
  WindowTooSmall,
  VerificationFailed,
  ZeroAlexander,
  TruncationTooSmall,
  UnknownName,
  Io,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace hfl
