#pragma once

#include <stdexcept>
#include <string>

namespace pairgate {

// Machine-readable reasons for "the requested configuration has no (finite)
// tunneling solution" and friends. The text of each reason is part of the
// CLI contract (exit code 3 + error field), so keep the strings stable.
enum class reason {
  no_field,
  degenerate_kinematics,
  kinematically_forbidden,
  infinite_suppression,
  forbidden_direction,
  inconsistent_solution,
  not_a_tunneling_segment,
  no_saddle_in_bracket,
  degenerate_pulse_point,
  unphysical_light_front_momentum,
  saddle_not_found,
};

inline const char* reason_text(reason r) {
  switch (r) {
    case reason::no_field: return "no field";
    case reason::degenerate_kinematics: return "degenerate kinematics";
    case reason::kinematically_forbidden: return "kinematically forbidden";
    case reason::infinite_suppression: return "forbidden: infinite suppression";
    case reason::forbidden_direction: return "forbidden direction";
    case reason::inconsistent_solution: return "inconsistent solution";
    case reason::not_a_tunneling_segment: return "not a tunneling segment";
    case reason::no_saddle_in_bracket: return "no saddle in bracket";
    case reason::degenerate_pulse_point: return "degenerate pulse point";
    case reason::unphysical_light_front_momentum:
      return "unphysical light-front momentum";
    case reason::saddle_not_found: return "saddle not found";
  }
  return "unknown";
}

class physics_error : public std::runtime_error {
 public:
  explicit physics_error(reason r, const std::string& detail = "")
      : std::runtime_error(detail.empty()
                               ? std::string(reason_text(r))
                               : std::string(reason_text(r)) + ": " + detail),
        reason_(r) {}

  reason why() const noexcept { return reason_; }
  const char* label() const noexcept { return reason_text(reason_); }

 private:
  reason reason_;
};

}  // namespace pairgate
