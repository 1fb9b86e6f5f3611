#pragma once

// Pair creation by a photon inside a linearly polarized plane-wave background
// A_x = (E0/omega_L) f(eta), eta = omega_L (t - z), treated in light-front
// variables. The transverse momentum p_x(eta) = P_x - (e E0/omega_L) f(eta)
// is exact; energies follow from the conserved Lambda = omega_L (p0 - pz).
// The creation point is the complex saddle eta_s where p0 + q0 = k0, i.e.
// p_x(eta_s) = +- i m_*; the exponent is the contour integral from the real
// axis to the saddle.

#include <complex>
#include <functional>
#include <string>

#include "pairgate/errors.hpp"

namespace pairgate {

struct PulseShape {
  // f and f_prime must accept complex-continued arguments (analytic near the
  // real axis); inverse_near(target, guess) solves f(eta) = target for real
  // eta near the guess.
  std::function<std::complex<double>(std::complex<double>)> f;
  std::function<std::complex<double>(std::complex<double>)> f_prime;
  std::function<double(double, double)> inverse_near;
  std::string name;

  static PulseShape sinusoid();  // f = sin
  static PulseShape linear();    // f = eta: constant crossed field in disguise
};

struct LightFrontParticle {
  double P_x = 0.0;     // canonical transverse momentum (conserved)
  double p_y = 0.0;
  double lambda = 0.0;  // omega_L (p0 - pz), conserved in the wave
};

struct PlaneWaveSetup {
  double E0 = 0.0;
  double omega_L = 0.0;
  PulseShape pulse;
  LightFrontParticle electron;
  LightFrontParticle positron;
  double k0 = 0.0;        // photon energy
  double lambda_k = 0.0;  // omega_L (k0 - kz); counterpropagating: 2 omega_L k0
  double e = 1.0;
  double m = 1.0;
};

// Symmetric counterpropagating setup: P_x = p_y = 0, lambda split equally.
PlaneWaveSetup make_symmetric_setup(double E0, double omega_L, double k0,
                                    PulseShape pulse, double m = 1.0,
                                    double e = 1.0);

// Checks lambda conservation (lambda_p + lambda_q = lambda_k to 1e-12
// relative), P_x + Q_x = 0, p_y + q_y = 0, positive lambdas (else
// unphysical_light_front_momentum), and xi > 1.
void validate(const PlaneWaveSetup& setup);

double effective_mass(const PlaneWaveSetup& setup);

// Intensity parameter xi = e E0 / (m_* omega_L); the perturbative saddle
// expansion is an expansion in 1/xi. Below ~10 the first-order saddle gets
// visibly rough; callers may want to warn.
double xi_parameter(const PlaneWaveSetup& setup);

struct SaddlePoint {
  double eta0 = 0.0;               // real phase where p_x crosses f-inverse
  std::complex<double> eta1{0.0, 0.0};  // first-order offset: eta_s ~ eta0 + eta1/xi
};

// Perturbative saddle: f(eta0) = omega_L P_x / (e E0), eta1 = -i/|f'(eta0)|
// (the branch with Im sum W >= 0). Throws degenerate_pulse_point when
// f'(eta0) ~ 0.
SaddlePoint solve_eta_s_perturbative(const PlaneWaveSetup& setup);

// First-order exponent sum(W) = (i/3) m_*^3 omega_L (1/lambda_p + 1/lambda_q)
// / (e |E0 f'(eta0)|).
std::complex<double> sigma_w_perturbative(const PlaneWaveSetup& setup);

struct ContourResult {
  std::complex<double> sigma_w{0.0, 0.0};
  std::complex<double> eta_s{0.0, 0.0};  // converged saddle
};

// Newton-refined saddle (residual tol 1e-12, damped) and straight-line
// contour integral from Re(eta_s) to eta_s of
// -(1/(2 lambda_p) + 1/(2 lambda_q)) [m_*^2 + p_x^2(phi)] d phi,
// branch fixed by Im sum W >= 0. Throws saddle_not_found on divergence.
ContourResult sigma_w_contour(const PlaneWaveSetup& setup);

}  // namespace pairgate
