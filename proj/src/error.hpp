#pragma once

#include <stdexcept>
#include <string>

namespace trawl {

enum class Errc {
  // model validation
  NonPositiveMass,
  NonPositivePhi,
  ZeroMark,
  EmptySupport,
  // path / data
  InvalidPath,
  NegativePathValue,
  UnreachableInitialValue,
  ZeroIntensityJump,
  InconsistentSupport,
  StateSpaceOverflow,
  TooManyJumps,
  DegenerateData,
  NotConverged,
  // plumbing
  ParseError,
  IoError,
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace trawl
