#pragma once

// Closed form of the one-particle barrier integral
//   Im W = int_0^u sqrt(D(t)) dt,   D(t) = 2 a t - c t^2,
// in the direction-normalized frame, where a = e(E p0e - B pze) >= 0 and
// c = e^2(E^2 - B^2). Covers all three regimes:
//   c > 0: (a^2 / 2c^{3/2}) (acos G - G sqrt(1-G^2)),  G = 1 - c u / a
//   c < 0: (a^2 / 2|c|^{3/2}) (G sqrt(G^2-1) - acosh G), G = 1 + |c| u / a
//   c = 0: (2/3) (2 a u)^{3/2} / (2 a)
// Near the light-like boundary both brackets cancel to ~(1-G)^{3/2}; a single
// series in the signed variable xt = c u / a covers that neighborhood to
// machine precision (the naive brackets lose half their digits there).

#include <cmath>
#include <limits>

#include "pairgate/errors.hpp"

namespace pairgate::detail {

struct barrier_eval {
  double w_im = 0.0;
  double gamma = 1.0;  // the G argument actually used (inf when a = 0, c < 0)
};

inline barrier_eval barrier_w(double a, double c, double u) {
  if (u <= 0.0) return {0.0, 1.0};
  if (a < 0.0) {
    // D < 0 immediately past the exit: the segment is not a barrier.
    throw physics_error(reason::inconsistent_solution,
                        "negative barrier slope at the exit");
  }
  if (a == 0.0) {
    if (c >= 0.0)
      throw physics_error(reason::inconsistent_solution,
                          "degenerate barrier with no growth");
    // pure-magnetic style D = |c| t^2
    const double sc = std::sqrt(-c);
    return {0.5 * sc * u * u, std::numeric_limits<double>::infinity()};
  }

  const double xt = c * u / a;  // signed distance from the light-like case
  const double gamma = 1.0 - xt;

  if (std::abs(xt) <= 1e-2) {
    // boundary series, relative truncation ~3e-11 at the cutoff
    const double s = 1.0 + xt * (-3.0 / 20.0 +
                     xt * (-3.0 / 224.0 +
                     xt * (-1.0 / 384.0 + xt * (-15.0 / 22528.0))));
    const double w = std::pow(2.0 * a * u, 1.5) / (3.0 * a) * s;
    return {w, gamma};
  }

  if (c > 0.0) {
    double g = gamma;
    if (g < -1.0) {
      if (g < -1.0 - 1e-12)
        throw physics_error(reason::inconsistent_solution,
                            "barrier argument beyond the allowed band");
      g = -1.0;
    }
    const double bracket = std::acos(g) - g * std::sqrt(std::max(0.0, 1.0 - g * g));
    return {a * a / (2.0 * std::pow(c, 1.5)) * bracket, gamma};
  }

  // c < 0, gamma > 1; acosh-form written via R = a/|c| to stay finite as R->0
  const double cp = -c;
  const double R = a / cp;
  const double v = u + R;
  const double s = std::sqrt(std::max(0.0, v * v - R * R));
  const double w = std::sqrt(cp) * (0.5 * v * s - 0.5 * R * R * std::log((v + s) / R));
  return {w, gamma};
}

}  // namespace pairgate::detail
