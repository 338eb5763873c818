#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ecq {

// Exception carrying a stable machine-readable code alongside the message.
// Codes surface verbatim in job reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* bad_input = "BAD_INPUT";
inline constexpr const char* non_prime = "NON_PRIME";
inline constexpr const char* zero_denominator = "ZERO_DENOMINATOR";
inline constexpr const char* log_of_zero = "LOG_OF_ZERO";
inline constexpr const char* divide_by_zero = "DIVIDE_BY_ZERO";
inline constexpr const char* prime_mismatch = "PRIME_MISMATCH";
inline constexpr const char* invalid_curve = "INVALID_CURVE";
inline constexpr const char* not_multiplicative = "NOT_MULTIPLICATIVE";
inline constexpr const char* precision_exhausted = "PRECISION_EXHAUSTED";
inline constexpr const char* point_count_budget = "POINT_COUNT_BUDGET";
inline constexpr const char* factor_budget = "FACTOR_BUDGET";
inline constexpr const char* everywhere_good = "EVERYWHERE_GOOD_REDUCTION";
inline constexpr const char* not_fundamental = "NOT_FUNDAMENTAL";
inline constexpr const char* disc_not_coprime = "DISC_NOT_COPRIME";
inline constexpr const char* repeated_prime = "REPEATED_PRIME";
inline constexpr const char* negative_corank = "NEGATIVE_CORANK";
inline constexpr const char* cap_exceeded = "CAP_EXCEEDED";
inline constexpr const char* invalid_module = "INVALID_MODULE";
inline constexpr const char* internal = "INTERNAL";
}  // namespace errc

}  // namespace ecq
