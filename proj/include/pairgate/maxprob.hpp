#pragma once

// Most probable (saddle-point) exit momenta: symmetric solutions p_z = q_z,
// p_y = 0 that extremize the exponent, plus the assisted-creation scans over
// the field ratio beta = |B|/E and the critical photon momentum where the
// optimum reaches the plane-wave point beta = 1.
//
// Scan convention: the photon travels along +z (kz_sign = +1) and beta > 0
// means the magnetic field is oriented so that it assists creation (the
// light-like beta = 1 point is then allowed). Negative grid values probe the
// opposing orientation, which turns infeasible at |beta| >= 1.

#include <limits>
#include <vector>

#include "pairgate/exponent.hpp"
#include "pairgate/fields.hpp"

namespace pairgate {

struct MaxProbResult {
  bool feasible = false;
  double beta = 0.0;  // grid value for sweeps, 0 otherwise
  double k0 = 0.0;
  double p_z = std::numeric_limits<double>::quiet_NaN();  // = q_z at the exit
  double exponent = std::numeric_limits<double>::infinity();
  reason fail = reason::kinematically_forbidden;  // meaningful when infeasible
  TunnelingSolution solution;                     // valid only when feasible
};

// Solves B(2 sqrt(m^2+pz^2) - k0) = E(2 pz - kz) for the symmetric exit,
// filters roots by segment validity, keeps the smallest exponent. Infeasible
// configurations (no valid root) come back with feasible = false rather than
// throwing, so grid scans can record gaps.
MaxProbResult most_probable_exit(const FieldConfig& config,
                                 const PhotonState& photon);

// One most_probable_exit per grid beta with E = E_fixed and the assisting
// orientation convention above. OpenMP-parallel over the grid; the *_serial
// variant is the reference implementation and must agree bitwise.
std::vector<MaxProbResult> sweep_beta(double E_fixed, double k0,
                                      const std::vector<double>& betas);
std::vector<MaxProbResult> sweep_beta_serial(double E_fixed, double k0,
                                             const std::vector<double>& betas);

struct OptimalBeta {
  double beta = 0.0;
  double exponent = std::numeric_limits<double>::infinity();
};

// Golden-section minimum of the exponent over beta in [0, 1].
OptimalBeta optimal_beta(double E_fixed, double k0, double beta_tol = 1e-6);

// Smallest k0 whose optimal beta sits at the plane-wave boundary beta = 1,
// by bisection to k0_tol. Independent of E_fixed (the exponent scales as
// 1/E at fixed beta, k0), which makes for a good cross-check.
double critical_photon_momentum(double E_fixed, double k0_tol = 1e-5);

}  // namespace pairgate
