#pragma once

// Independent quadrature route for the suppression exponents, and the
// tunneling-picture observables (kinetic vs pseudoenergy, imaginary part of
// the z trajectory) sampled along the barrier. Deliberately shares only
// momentum_at() with the closed forms: Im p_x is integrated over the actual
// stored geometry, with a u = t^2 endpoint substitution soaking up the
// square-root vanishing of |p_x| at the exits.

#include <vector>

#include "pairgate/fields.hpp"

namespace pairgate {

struct OracleResult {
  double w_minus_im = 0.0;
  double w_plus_im = 0.0;
  double error_minus = 0.0;  // achieved error estimates (<= abs_tol each)
  double error_plus = 0.0;
};

// abs_tol <= 0 selects the default 1e-10 * m^2. Throws
// not_a_tunneling_segment if p_x^2 turns positive inside either segment.
OracleResult integrate_w(const TunnelingSolution& solution,
                         const FieldConfig& config, double abs_tol = 0.0);

struct PictureData {
  std::vector<double> x;
  // per-species columns aligned with x; kinetic energy extrapolates the
  // linear law everywhere, the pseudoenergy is sqrt(m_*^2 + p_z(x)^2), and
  // measure = pseudo - kinetic (zero exactly at the exits, positive under
  // the barrier).
  std::vector<double> electron_kinetic, electron_pseudo, electron_measure,
      electron_im_z;
  std::vector<double> positron_kinetic, positron_pseudo, positron_measure,
      positron_im_z;
  double x_exit_minus = 0.0;
  double x_exit_plus = 0.0;
  double x_creation = 0.0;
};

// Uniform grid spanning [min, max] of the three marker positions, endpoints
// included (the exits land exactly on the first/last sample). Im z is
// anchored to zero at each particle's exit, accumulates along its barrier
// segment, and holds its end value beyond the segment.
PictureData emit_picture(const TunnelingSolution& solution,
                         const FieldConfig& config, int n_samples = 201);

}  // namespace pairgate
