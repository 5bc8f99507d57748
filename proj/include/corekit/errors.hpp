#pragma once

#include <stdexcept>
#include <string>

namespace corekit {

enum class Errc {
  InvalidArgument,
  Parse,
  NonPositivePart,
  NotDistinctOdd,
  NotSelfConjugate,
  BoxOutOfDiagram,
  InvalidModulus,
  NonNegativeArgument,
  PreconditionViolated,
  NonIntegralResult,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace corekit
