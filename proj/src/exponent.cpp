#include "pairgate/exponent.hpp"

#include <cmath>

#include "pairgate/detail/barrier.hpp"

namespace pairgate {

namespace {

// The pair separates from the creation point toward the two exits; the stored
// geometry encodes the direction. Degenerate zero-extent solutions default to
// +1 (both W vanish regardless).
int direction_from_geometry(const TunnelingSolution& s) {
  if (s.positron.x > s.electron.x) return 1;
  if (s.positron.x < s.electron.x) return -1;
  return 1;
}

struct Particle {
  double p0, pz, u;
};

detail::barrier_eval one_particle(const Particle& p,
                                  const TunnelingSolution& s,
                                  const FieldConfig& config) {
  const int dir = direction_from_geometry(s);
  const double e = config.e;
  const double En = dir * config.E, Bn = dir * config.B;
  const double a = e * (En * p.p0 - Bn * p.pz);
  const double c = e * e * (config.E * config.E - config.B * config.B);
  const double a_tol = 1e-12 * e *
                       (std::abs(config.E) + std::abs(config.B)) *
                       std::max(p.p0, config.m);
  if (a < -a_tol)
    throw physics_error(reason::inconsistent_solution,
                        "exit momenta incompatible with the separation direction");
  return detail::barrier_w(std::max(a, 0.0), c, p.u);
}

Particle electron_of(const TunnelingSolution& s) {
  return {s.electron.p_0, s.electron.p_z, s.extent_minus};
}

Particle positron_of(const TunnelingSolution& s) {
  return {s.positron.p_0, s.positron.p_z, s.extent_plus};
}

void check_light_like_photon(const FieldConfig& config,
                             const PhotonState& photon) {
  if (photon.k0 == 0.0)
    throw physics_error(reason::infinite_suppression,
                        "light-like fields cannot close the barrier alone");
  // the photon has to run against the field's propagation direction E x B
  if (photon.kz_sign * config.E * config.B > 0.0)
    throw physics_error(reason::forbidden_direction,
                        "photon must counterpropagate the light-like field");
}

}  // namespace

std::complex<double> w_minus_e_dominated(const TunnelingSolution& solution,
                                         const FieldConfig& config) {
  return {0.0, one_particle(electron_of(solution), solution, config).w_im};
}

std::complex<double> w_minus_b_dominated(const TunnelingSolution& solution,
                                         const FieldConfig& config) {
  return {0.0, one_particle(electron_of(solution), solution, config).w_im};
}

std::complex<double> w_minus_light_like(const TunnelingSolution& solution,
                                        const FieldConfig& config,
                                        const PhotonState& photon) {
  check_light_like_photon(config, photon);
  return {0.0, one_particle(electron_of(solution), solution, config).w_im};
}

std::complex<double> w_plus(const TunnelingSolution& solution,
                            const FieldConfig& config,
                            const PhotonState& photon) {
  if (classify_regime(config) == Regime::light_like)
    check_light_like_photon(config, photon);
  return {0.0, one_particle(positron_of(solution), solution, config).w_im};
}

ExponentResult probability_exponent(TunnelingSolution& solution,
                                    const FieldConfig& config,
                                    const PhotonState& photon) {
  ExponentResult r;
  r.regime = classify_regime(config);
  if (r.regime == Regime::light_like) check_light_like_photon(config, photon);
  const auto be = one_particle(electron_of(solution), solution, config);
  const auto bp = one_particle(positron_of(solution), solution, config);
  r.w_minus = {0.0, be.w_im};
  r.w_plus = {0.0, bp.w_im};
  r.gamma_minus = be.gamma;
  r.gamma_plus = bp.gamma;
  r.total_im = r.w_minus.imag() + r.w_plus.imag();
  r.probability_exponent = 2.0 * r.total_im;
  if (!(r.w_minus.imag() >= 0.0) || !(r.w_plus.imag() >= 0.0))
    throw physics_error(reason::inconsistent_solution,
                        "suppression exponent came out negative");
  solution.w_minus = r.w_minus;
  solution.w_plus = r.w_plus;
  return r;
}

}  // namespace pairgate
