#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motocell {

// Error kinds, grouped by how the CLI reports them: input validation
// (exit 2), refusals such as budget or non-split data (exit 3), and
// internal consistency checks that should never fire (exit 1).
enum class Errc {
  invalid_type,
  invalid_param,
  invalid_input,
  unknown_name,
  pointing_mismatch,
  dimension_too_small,
  not_even_pure,
  inconsistent_dimensions,
  not_atacc,
  shape_mismatch,
  ambient_mismatch,
  empty_arrangement,
  non_normalized,
  not_hyperplanes,
  parse_error,
  io_error,
  resource_limit,
  non_split,
  internal_check,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_type: return "InvalidType";
    case Errc::invalid_param: return "InvalidParam";
    case Errc::invalid_input: return "InvalidInput";
    case Errc::unknown_name: return "UnknownName";
    case Errc::pointing_mismatch: return "PointingMismatch";
    case Errc::dimension_too_small: return "DimensionTooSmall";
    case Errc::not_even_pure: return "NotEvenPure";
    case Errc::inconsistent_dimensions: return "InconsistentDimensions";
    case Errc::not_atacc: return "NotAtacc";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::empty_arrangement: return "EmptyArrangement";
    case Errc::non_normalized: return "NonNormalized";
    case Errc::not_hyperplanes: return "NotHyperplanes";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::resource_limit: return "ResourceLimit";
    case Errc::non_split: return "NonSplit";
    case Errc::internal_check: return "InternalCheck";
  }
  return "Unknown";
}

// Process exit code the CLI uses for a given error kind.
constexpr int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::resource_limit:
    case Errc::non_split:
      return 3;
    case Errc::internal_check:
      return 1;
    default:
      return 2;
  }
}

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

inline void require(bool ok, Errc code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace motocell
