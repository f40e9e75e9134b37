#ifndef DENSEDEL_ERROR_H_
#define DENSEDEL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace densedel {

enum class ErrorCode {
  kInvalidVertex,
  kInvalidEdge,
  kEmptyGraph,
  kInvalidNetwork,
  kInvalidHyperedge,
  kUnsupportedSelfLoop,
  kInvalidMarginal,
  kTooLarge,
  kInvalidOracle,
  kInvalidEpsilon,
  kInvalidCost,
  kInvalidRational,
  kParseError,
  kUnsupportedInstance,
  kNotFiniteCost,
  kNotFeasible,
  kInfeasibleWithFiniteCost,
  kHypothesisViolated,
  kInvariantViolation,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace densedel

#endif  // DENSEDEL_ERROR_H_
