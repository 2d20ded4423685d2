#include "knotinv/errors.hpp"

namespace knotinv {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::malformed_token: return "MalformedToken";
    case ErrorCode::crossing_seen_once: return "CrossingSeenOnce";
    case ErrorCode::crossing_seen_twice_same_strand: return "CrossingSeenTwiceSameStrand";
    case ErrorCode::crossing_seen_too_often: return "CrossingSeenTooOften";
    case ErrorCode::sign_mismatch: return "SignMismatch";
    case ErrorCode::side_index_out_of_range: return "SideIndexOutOfRange";
    case ErrorCode::malformed_header: return "MalformedHeader";
    case ErrorCode::genus_too_large: return "GenusTooLarge";
    case ErrorCode::variable_set_mismatch: return "VariableSetMismatch";
    case ErrorCode::exponent_out_of_range: return "ExponentOutOfRange";
    case ErrorCode::non_square: return "NonSquare";
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::malformed_polynomial: return "MalformedPolynomial";
    case ErrorCode::parity_incomplete: return "ParityIncomplete";
    case ErrorCode::move_not_applicable: return "MoveNotApplicable";
  }
  return "Unknown";
}

}  // namespace knotinv
