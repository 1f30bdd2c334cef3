#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monty {

enum class Errc {
  kInvalidDoorCount,
  kInvalidDoorIndex,
  kNegativeProbability,
  kNotNormalized,
  kInvalidBias,
  kInvalidSwitchProbability,
  kHostOpensPickedDoor,
  kHostOpensCarDoor,
  kDimensionMismatch,
  kUndefinedConditional,
  kInapplicableProposition,
  kInapplicableCheck,
  kUnsupportedSize,
  kDivisionByZero,
  kMalformedRational,
  kMalformedSpec,
  kInvalidConfig,
  kSamplingPrecision,
};

// Stable kebab-case identifier, used in machine-readable CLI errors.
std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace monty
