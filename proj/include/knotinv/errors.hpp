// Error types shared by every module. Each carries a machine-checkable code.

#ifndef KNOTINV_ERRORS_HPP
#define KNOTINV_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotinv {

enum class ErrorCode {
  // diagram parsing / validation
  malformed_token,
  crossing_seen_once,
  crossing_seen_twice_same_strand,
  crossing_seen_too_often,
  sign_mismatch,
  side_index_out_of_range,
  malformed_header,
  genus_too_large,
  // ring arithmetic
  variable_set_mismatch,
  exponent_out_of_range,
  non_square,
  ring_mismatch,
  malformed_polynomial,
  // matrices / moves
  parity_incomplete,
  move_not_applicable,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace knotinv

#endif  // KNOTINV_ERRORS_HPP
