#include "monty/error.hpp"

namespace monty {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidDoorCount: return "invalid-door-count";
    case Errc::kInvalidDoorIndex: return "invalid-door-index";
    case Errc::kNegativeProbability: return "negative-probability";
    case Errc::kNotNormalized: return "not-normalized";
    case Errc::kInvalidBias: return "invalid-bias";
    case Errc::kInvalidSwitchProbability: return "invalid-switch-probability";
    case Errc::kHostOpensPickedDoor: return "host-opens-picked-door";
    case Errc::kHostOpensCarDoor: return "host-opens-car-door";
    case Errc::kDimensionMismatch: return "dimension-mismatch";
    case Errc::kUndefinedConditional: return "undefined-conditional";
    case Errc::kInapplicableProposition: return "inapplicable-proposition";
    case Errc::kInapplicableCheck: return "inapplicable-check";
    case Errc::kUnsupportedSize: return "unsupported-size";
    case Errc::kDivisionByZero: return "division-by-zero";
    case Errc::kMalformedRational: return "malformed-rational";
    case Errc::kMalformedSpec: return "malformed-spec";
    case Errc::kInvalidConfig: return "invalid-config";
    case Errc::kSamplingPrecision: return "sampling-precision";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code) {}

}  // namespace monty
