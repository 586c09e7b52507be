// Error codes and the exception type shared across the library.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiconj {

// Failure kinds. Each exception carries one of these plus a short integer
// payload (SemiconjError::details) identifying the offending entry, triple,
// or element.
enum class Errc {
  out_of_range,             // table entry outside 0..order-1; details {entry, row, col}
  not_associative,          // first violating triple; details {i, j, l}
  bad_shape,                // raw grid is not order x order, or order < 1
  zero_power_in_semigroup,  // a^0 requested without an identity element
  bad_exponent,             // exponent outside the operation's domain
  bad_element,              // element id outside the carrier
  condition_violated,       // xy in {yx, (xy)^n} fails; details {x, y, n}
  bad_witness,              // witness pair does not certify its chain
  composition_failed,       // composed witness failed re-verification
  not_a_group,              // details {first element lacking an inverse}, if any
  order_cap_exceeded,       // requested order above the configured cap
  parse_error,              // malformed table or fixture text
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::out_of_range:
      return "OUT_OF_RANGE";
    case Errc::not_associative:
      return "NOT_ASSOCIATIVE";
    case Errc::bad_shape:
      return "BAD_SHAPE";
    case Errc::zero_power_in_semigroup:
      return "ZERO_POWER_IN_SEMIGROUP";
    case Errc::bad_exponent:
      return "BAD_EXPONENT";
    case Errc::bad_element:
      return "BAD_ELEMENT";
    case Errc::condition_violated:
      return "CONDITION_VIOLATED";
    case Errc::bad_witness:
      return "BAD_WITNESS";
    case Errc::composition_failed:
      return "COMPOSITION_FAILED";
    case Errc::not_a_group:
      return "NOT_A_GROUP";
    case Errc::order_cap_exceeded:
      return "ORDER_CAP_EXCEEDED";
    case Errc::parse_error:
      return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

class SemiconjError : public std::runtime_error {
 public:
  SemiconjError(Errc code, const std::string& what,
                std::vector<long long> details = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        details_(std::move(details)) {}

  Errc code() const noexcept { return code_; }

  // Small numeric payload, e.g. {entry, row, col} for out_of_range or
  // {i, j, l} for not_associative.
  const std::vector<long long>& details() const noexcept { return details_; }

 private:
  Errc code_;
  std::vector<long long> details_;
};

}  // namespace semiconj
