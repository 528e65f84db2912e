#pragma once

#include <stdexcept>
#include <string>

namespace swan {

enum class errc {
  division_by_zero,
  not_a_pth_power,
  bound_exceeded,
  length_mismatch,
  not_divisible,
  not_closed,
  unramified_character,
  zero_element,
  degenerate_operator,
  small_radius_condition_fails,
  hypothesis_violated,
  inexact_leading,
  not_pure,
  integrality_failure,
  parse_error,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_a_pth_power: return "NotAPthPower";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_divisible: return "NotDivisible";
    case errc::not_closed: return "NotClosed";
    case errc::unramified_character: return "UnramifiedCharacter";
    case errc::zero_element: return "ZeroElement";
    case errc::degenerate_operator: return "DegenerateOperator";
    case errc::small_radius_condition_fails: return "SmallRadiusConditionFails";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::inexact_leading: return "InexactLeading";
    case errc::not_pure: return "NotPure";
    case errc::integrality_failure: return "IntegralityFailure";
    case errc::parse_error: return "ParseError";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

/* Single exception type carrying a machine-readable code; the CLI maps
 * integrality_failure (a broken internal invariant) to exit 3 and the
 * rest to exit 2. */
class conductor_error : public std::runtime_error {
 public:
  conductor_error(errc c, const std::string& detail)
      : std::runtime_error(std::string(errc_name(c)) + ": " + detail), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& detail) {
  throw conductor_error(c, detail);
}

}  // namespace swan
