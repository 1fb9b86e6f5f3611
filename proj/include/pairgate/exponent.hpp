#pragma once

// Closed-form suppression exponents W^- (electron) and W^+ (positron) for an
// assembled tunneling solution, and the total pair-creation probability
// exponent 2 Im(W^- + W^+): P ~ exp(-2 Im sum W).

#include <complex>

#include "pairgate/fields.hpp"

namespace pairgate {

struct ExponentResult {
  Regime regime = Regime::e_dominated;
  std::complex<double> w_minus{0.0, 0.0};
  std::complex<double> w_plus{0.0, 0.0};
  double total_im = 0.0;              // Im(w_minus + w_plus)
  double probability_exponent = 0.0;  // 2 * total_im
  double gamma_minus = 1.0;           // barrier arguments actually used
  double gamma_plus = 1.0;
};

// Per-regime electron exponents. The direction normalization is read off the
// stored exit geometry; the light-like form additionally needs the photon to
// enforce its direction requirement (and k0 > 0: a light-like field alone
// cannot supply the creation energy, so k0 = 0 throws infinite_suppression).
std::complex<double> w_minus_e_dominated(const TunnelingSolution& solution,
                                         const FieldConfig& config);
std::complex<double> w_minus_b_dominated(const TunnelingSolution& solution,
                                         const FieldConfig& config);
std::complex<double> w_minus_light_like(const TunnelingSolution& solution,
                                        const FieldConfig& config,
                                        const PhotonState& photon);

// Positron counterpart, dispatching on the regime internally.
std::complex<double> w_plus(const TunnelingSolution& solution,
                            const FieldConfig& config,
                            const PhotonState& photon);

// Computes both exponents, writes them into the solution, and returns the
// bundle. Asserts Im W >= 0 for each particle (violations mean the solution
// was assembled inconsistently and throw).
ExponentResult probability_exponent(TunnelingSolution& solution,
                                    const FieldConfig& config,
                                    const PhotonState& photon);

}  // namespace pairgate
