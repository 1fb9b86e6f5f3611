#pragma once

// Constant crossed field configuration E = E x^, B = B y^ plus an optional
// photon along z, and the kinematics of the imaginary-time tunneling segment:
// linear momentum evolution in x, creation/exit points, trajectory extents.

#include <complex>
#include <utility>

#include "pairgate/errors.hpp"

namespace pairgate {

enum class Regime { e_dominated, light_like, b_dominated };

const char* to_string(Regime r);

struct FieldConfig {
  double E = 0.0;  // electric field along x; units of m^2/e at defaults
  double B = 0.0;  // magnetic field along y
  double e = 1.0;  // elementary charge
  double m = 1.0;  // electron mass
};

// Throws std::invalid_argument for non-finite fields or e, m <= 0.
void validate(const FieldConfig& config);

// sqrt(|E^2 - B^2|); the secular field strength left after boosting to the
// frame where the weaker field vanishes. Boost-invariant.
double invariant_strength(const FieldConfig& config);

// |E| vs |B| with a relative tolerance band around the light-like case.
// Throws physics_error(no_field) when both vanish.
Regime classify_regime(const FieldConfig& config, double rel_tol = 1e-9);

struct PhotonState {
  double k0 = 0.0;  // photon energy, k_z = kz_sign * k0
  int kz_sign = 0;  // -1, 0, +1
  double kz() const { return kz_sign * k0; }
};

void validate(const PhotonState& photon);

// Exit state of one particle: transverse momentum is conserved, p_0 on shell.
struct ExitState {
  double p_y = 0.0;
  double p_z = 0.0;
  double p_0 = 1.0;
  double x = 0.0;  // exit position
};

ExitState make_exit_state(double p_y, double p_z, const FieldConfig& config,
                          double x = 0.0);

// m_* = sqrt(m^2 + p_y^2): the mass the tunneling problem sees after the
// transverse motion is folded in.
double effective_mass(double p_y, const FieldConfig& config);

enum class Species { electron, positron };

struct Momentum {
  double p0 = 0.0;
  double pz = 0.0;
  double px_squared = 0.0;  // p0^2 - m_*^2 - pz^2; negative under the barrier
};

// Linear evolution away from the exit: the crossed field feeds p0 and pz at
// constant rates (electron: -eE, -eB per unit x; positron: +eE, +eB).
Momentum momentum_at(double x, const ExitState& exit, const FieldConfig& config,
                     Species species);

// +1 or -1: the x direction in which the pair separates while tunneling.
// sgn(E) when |E| >= |B|, -sgn(B k_z) when |B| > |E| (a photon is then
// mandatory; k0 = 0 throws).
int tunneling_direction(const FieldConfig& config, const PhotonState& photon);

struct CreationPoint {
  double x_s = 0.0;    // shared creation position
  double m_star = 0.0; // |p_x| at creation on the imaginary branch
};

struct TunnelingSolution {
  ExitState electron;
  ExitState positron;
  CreationPoint creation;
  double extent_minus = 0.0;  // |x_s - x_e^-|, nonnegative length
  double extent_plus = 0.0;   // |x_e^+ - x_s|
  std::complex<double> w_minus{0.0, 0.0};  // filled by the exponent layer
  std::complex<double> w_plus{0.0, 0.0};
};

// Barrier lengths for both particles from the exit momenta and the photon.
// k0 = 0 uses the limiting branch s = kz_sign (s = +1 when no photon); both
// branches carry the same total Im W, only the electron/positron split swaps.
// Throws degenerate_kinematics when E k0 - B k_z = 0 with k0 > 0, and
// kinematically_forbidden when no branch gives nonnegative lengths.
std::pair<double, double> trajectory_extents(const ExitState& electron,
                                             const ExitState& positron,
                                             const PhotonState& photon,
                                             const FieldConfig& config);

// Solves the creation-point constraint B(p0e + q0e - k0) = E(pze + qze - kz)
// for the positron exit given the electron exit. Multiple roots are filtered
// by segment validity and ranked by total Im W; no valid root throws
// kinematically_forbidden.
ExitState solve_positron_exit(const ExitState& electron,
                              const PhotonState& photon,
                              const FieldConfig& config);

// Full kinematic assembly: positron exit, extents, exit/creation positions
// (electron exit anchored at its stored x). w_minus/w_plus stay zero here;
// the exponent layer fills them.
TunnelingSolution assemble_solution(const ExitState& electron,
                                    const PhotonState& photon,
                                    const FieldConfig& config);

// Same, with the positron exit supplied (skips the constraint solve but
// still verifies the residual).
TunnelingSolution assemble_solution(const ExitState& electron,
                                    const ExitState& positron,
                                    const PhotonState& photon,
                                    const FieldConfig& config);

struct BoostedSetup {
  FieldConfig config;
  PhotonState photon;
  ExitState electron;
  ExitState positron;
};

// Boost along z with the given rapidity (v = tanh chi). E' = g(E - vB),
// B' = g(B - vE); (p0, pz) transform as a four-vector; x and p_y are
// invariant, as is invariant_strength.
BoostedSetup boost_z(const FieldConfig& config, const PhotonState& photon,
                     const ExitState& electron, const ExitState& positron,
                     double rapidity);

}  // namespace pairgate
