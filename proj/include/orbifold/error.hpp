#pragma once

#include <stdexcept>
#include <string>

namespace orbifold {

// Every failure mode the library reports deliberately. Codes are stable API:
// the CLI maps them to exit status 3 and prints the code name.
enum class ErrorCode {
  SyntaxError,
  InvalidOrder,
  InvalidGenus,
  NoMirrors,
  Unsupported,
  IncompatibleComplex,
  NotSimplicial,
  NotEffective,
  ClosureBoundExceeded,
  NotASurface,
  ChiMismatch,
  NotASubgroup,
  MalformedCertificate,
  WrongDimension,
  InvalidWeights,
  InvalidProfile,
  BadIntervals,
  OrderMismatch,
  BadOrbifold,
  SignMismatch,
  FlatIndeterminate,
  NotSpherical,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbifold
