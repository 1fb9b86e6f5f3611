#include "pairgate/fields.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pairgate/detail/barrier.hpp"
#include "pairgate/detail/numerics.hpp"

namespace pairgate {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Direction-normalized fields: mirroring x -> -x flips E and B but leaves
// momenta alone, so closed forms can assume the pair separates toward +x.
struct NormFields {
  double En, Bn;
  int dir;
};

NormFields normalize(const FieldConfig& config, int dir) {
  return {dir * config.E, dir * config.B, dir};
}

// Barrier slope at the exit, a = e(En p0 - Bn pz); nonnegative on a valid
// tunneling segment (first mass-shell crossing).
double slope_a(const NormFields& nf, double e, double p0, double pz) {
  return e * (nf.En * p0 - nf.Bn * pz);
}

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::e_dominated: return "e_dominated";
    case Regime::light_like: return "light_like";
    case Regime::b_dominated: return "b_dominated";
  }
  return "unknown";
}

void validate(const FieldConfig& config) {
  if (!std::isfinite(config.E) || !std::isfinite(config.B))
    throw std::invalid_argument("field amplitudes must be finite");
  if (!(config.e > 0.0) || !std::isfinite(config.e))
    throw std::invalid_argument("charge must be positive");
  if (!(config.m > 0.0) || !std::isfinite(config.m))
    throw std::invalid_argument("mass must be positive");
}

double invariant_strength(const FieldConfig& config) {
  validate(config);
  return std::sqrt(std::abs(config.E * config.E - config.B * config.B));
}

Regime classify_regime(const FieldConfig& config, double rel_tol) {
  validate(config);
  const double e2 = config.E * config.E;
  const double b2 = config.B * config.B;
  const double top = std::max(e2, b2);
  if (top == 0.0) throw physics_error(reason::no_field);
  if (std::abs(e2 - b2) <= rel_tol * top) return Regime::light_like;
  return e2 > b2 ? Regime::e_dominated : Regime::b_dominated;
}

void validate(const PhotonState& photon) {
  if (!(photon.k0 >= 0.0) || !std::isfinite(photon.k0))
    throw std::invalid_argument("photon energy must be finite and nonnegative");
  if (photon.kz_sign < -1 || photon.kz_sign > 1)
    throw std::invalid_argument("kz_sign must be -1, 0 or +1");
  if (photon.k0 > 0.0 && photon.kz_sign == 0)
    throw std::invalid_argument("a photon with k0 > 0 needs kz_sign = +-1");
}

ExitState make_exit_state(double p_y, double p_z, const FieldConfig& config,
                          double x) {
  validate(config);
  if (!std::isfinite(p_y) || !std::isfinite(p_z) || !std::isfinite(x))
    throw std::invalid_argument("exit state entries must be finite");
  ExitState s;
  s.p_y = p_y;
  s.p_z = p_z;
  s.p_0 = std::hypot(effective_mass(p_y, config), p_z);
  s.x = x;
  return s;
}

double effective_mass(double p_y, const FieldConfig& config) {
  return std::hypot(config.m, p_y);
}

Momentum momentum_at(double x, const ExitState& exit, const FieldConfig& config,
                     Species species) {
  const double sign = species == Species::electron ? -1.0 : 1.0;
  const double dx = x - exit.x;
  Momentum p;
  p.p0 = exit.p_0 + sign * config.e * config.E * dx;
  p.pz = exit.p_z + sign * config.e * config.B * dx;
  const double ms = effective_mass(exit.p_y, config);
  p.px_squared = p.p0 * p.p0 - ms * ms - p.pz * p.pz;
  return p;
}

int tunneling_direction(const FieldConfig& config, const PhotonState& photon) {
  validate(photon);
  const Regime regime = classify_regime(config);
  if (regime != Regime::b_dominated) return sgn(config.E);
  if (photon.k0 == 0.0 || photon.kz_sign == 0)
    throw physics_error(reason::kinematically_forbidden,
                        "magnetic-dominated tunneling needs a photon");
  return -sgn(config.B * photon.kz());
}

std::pair<double, double> trajectory_extents(const ExitState& electron,
                                             const ExitState& positron,
                                             const PhotonState& photon,
                                             const FieldConfig& config) {
  const int dir = tunneling_direction(config, photon);
  const NormFields nf = normalize(config, dir);
  const double e = config.e;
  const double k0 = photon.k0;

  if (k0 > 0.0) {
    const double kz = photon.kz();
    const double den = e * (nf.En * k0 - nf.Bn * kz);
    const double den_scale =
        e * k0 * (std::abs(config.E) + std::abs(config.B));
    if (std::abs(den) <= 1e-15 * den_scale)
      throw physics_error(reason::degenerate_kinematics,
                          "E k0 - B kz vanishes");
    const double um = (k0 * electron.p_0 - kz * electron.p_z) / den;
    const double up = (k0 * positron.p_0 - kz * positron.p_z) / den;
    // k0 p0 - kz pz > 0 always (p0 > |pz| on shell), so a negative length
    // can only mean the photon and fields cannot close the barrier.
    if (um < 0.0 || up < 0.0)
      throw physics_error(reason::kinematically_forbidden,
                          "negative barrier length");
    return {um, up};
  }

  // k0 = 0: the two limiting branches s = +-1 of the extent formula carry the
  // same total Im W (only the electron/positron split differs), so we follow
  // the photon's kz_sign when one is recorded and default to s = +1.
  std::vector<int> branches;
  if (photon.kz_sign != 0)
    branches.push_back(photon.kz_sign);
  else
    branches = {+1, -1};
  bool saw_degenerate = false;
  for (int s : branches) {
    const double den = e * (nf.En - s * nf.Bn);
    const double den_scale = e * (std::abs(config.E) + std::abs(config.B));
    if (std::abs(den) <= 1e-15 * den_scale) {
      saw_degenerate = true;
      continue;
    }
    if (den < 0.0) continue;  // p0 -+ pz > 0 on shell: extents would be < 0
    const double um = (electron.p_0 - s * electron.p_z) / den;
    const double up = (positron.p_0 - s * positron.p_z) / den;
    if (um >= 0.0 && up >= 0.0) return {um, up};
  }
  if (saw_degenerate)
    throw physics_error(reason::degenerate_kinematics,
                        "light-like fields with no photon momentum");
  throw physics_error(reason::kinematically_forbidden,
                      "no branch with nonnegative barrier lengths");
}

namespace {

// Total Im W of a candidate solution, used only to rank multiple roots of the
// creation constraint; invalid segments rank as rejected.
bool candidate_weight(const ExitState& el, const ExitState& po,
                      const PhotonState& photon, const FieldConfig& config,
                      double& w_total) {
  std::pair<double, double> uu;
  try {
    uu = trajectory_extents(el, po, photon, config);
  } catch (const physics_error&) {
    return false;
  }
  const int dir = tunneling_direction(config, photon);
  const NormFields nf = normalize(config, dir);
  const double e = config.e;
  const double c = e * e * (config.E * config.E - config.B * config.B);
  const double ap = slope_a(nf, e, el.p_0, el.p_z);
  const double aq = slope_a(nf, e, po.p_0, po.p_z);
  const double a_tol = 1e-12 * e * (std::abs(config.E) + std::abs(config.B)) *
                       std::max({el.p_0, po.p_0, config.m});
  if (ap < -a_tol || aq < -a_tol) return false;
  try {
    w_total = detail::barrier_w(std::max(ap, 0.0), c, uu.first).w_im +
              detail::barrier_w(std::max(aq, 0.0), c, uu.second).w_im;
  } catch (const physics_error&) {
    return false;
  }
  return true;
}

}  // namespace

ExitState solve_positron_exit(const ExitState& electron,
                              const PhotonState& photon,
                              const FieldConfig& config) {
  validate(config);
  validate(photon);
  const Regime regime = classify_regime(config);
  if (regime == Regime::light_like && photon.k0 == 0.0)
    throw physics_error(reason::infinite_suppression,
                        "light-like fields cannot close the barrier alone");

  const double E = config.E, B = config.B;
  const double k0 = photon.k0, kz = photon.kz();
  const double p0e = electron.p_0, pze = electron.p_z;
  const double ms = effective_mass(electron.p_y, config);

  // creation constraint residual in the positron exit momentum
  const auto G = [&](double qz) {
    return B * (p0e + std::hypot(ms, qz) - k0) - E * (pze + qz - kz);
  };

  std::vector<double> candidates;

  if (B == 0.0) {
    // E alone: plain z-momentum conservation
    candidates.push_back(kz - pze);
  } else if (E == 0.0) {
    const double rest = k0 - p0e;  // must cover the positron energy
    if (rest < ms)
      throw physics_error(reason::kinematically_forbidden,
                          "photon energy below the positron shell");
    const double root = std::sqrt(std::max(0.0, rest * rest - ms * ms));
    candidates.push_back(root);
    if (root > 0.0) candidates.push_back(-root);
  } else if (std::abs(E) == std::abs(B)) {
    // light-like: q0 -+ qz is fixed linearly; closed form
    if (B == E) {
      const double h = (k0 - kz) - (p0e - pze);
      if (h <= 0.0)
        throw physics_error(reason::kinematically_forbidden,
                            "electron exit exhausts the light-front budget");
      candidates.push_back((ms * ms - h * h) / (2.0 * h));
    } else {  // B == -E
      const double h = (k0 + kz) - (p0e + pze);
      if (h <= 0.0)
        throw physics_error(reason::kinematically_forbidden,
                            "electron exit exhausts the light-front budget");
      candidates.push_back((h * h - ms * ms) / (2.0 * h));
    }
  } else if (std::abs(B) < std::abs(E)) {
    // G is strictly monotone: one root, bracketed by expansion
    double L = 10.0 * std::max({config.m, k0, std::abs(pze), 1.0});
    double gl = G(-L), gr = G(L);
    int grow = 0;
    while (gl * gr > 0.0 && grow++ < 60) {
      L *= 2.0;
      gl = G(-L);
      gr = G(L);
    }
    if (gl * gr > 0.0)
      throw physics_error(reason::kinematically_forbidden,
                          "creation constraint has no root");
    candidates.push_back(detail::brent_root(G, -L, L, gl, gr));
  } else {
    // |B| > |E|, both nonzero: G has a single extremum at qz*, up to 2 roots
    const double r = E / B;  // |r| < 1
    const double qstar = ms * r / std::sqrt(1.0 - r * r);
    const double gstar = G(qstar);
    const double g_scale = std::abs(B) * (p0e + ms + k0) +
                           std::abs(E) * (std::abs(pze) + std::abs(kz) + ms);
    if (std::abs(gstar) <= 1e-13 * g_scale) {
      candidates.push_back(qstar);  // grazing double root
    } else {
      const bool minimum = B > 0.0;  // G convex for B > 0, concave otherwise
      if ((minimum && gstar > 0.0) || (!minimum && gstar < 0.0))
        throw physics_error(reason::kinematically_forbidden,
                            "photon too soft for magnetic-dominated creation");
      double L = std::abs(qstar) + 10.0 * std::max({config.m, k0, 1.0});
      int grow = 0;
      while (G(-L) * gstar > 0.0 && grow++ < 60) L *= 2.0;
      if (G(-L) * gstar < 0.0)
        candidates.push_back(detail::brent_root(G, -L, qstar));
      L = std::abs(qstar) + 10.0 * std::max({config.m, k0, 1.0});
      grow = 0;
      while (G(L) * gstar > 0.0 && grow++ < 60) L *= 2.0;
      if (G(L) * gstar < 0.0)
        candidates.push_back(detail::brent_root(G, qstar, L));
    }
  }

  // validity filter + minimal total Im W among surviving roots
  bool found = false;
  double best_w = 0.0;
  ExitState best;
  for (double qz : candidates) {
    const ExitState po = make_exit_state(-electron.p_y, qz, config);
    double w;
    if (!candidate_weight(electron, po, photon, config, w)) continue;
    if (!found || w < best_w) {
      found = true;
      best_w = w;
      best = po;
    }
  }
  if (!found)
    throw physics_error(reason::kinematically_forbidden,
                        "no valid tunneling segment among constraint roots");
  return best;
}

namespace {

TunnelingSolution finish_assembly(const ExitState& electron, ExitState positron,
                                  const PhotonState& photon,
                                  const FieldConfig& config) {
  const auto uu = trajectory_extents(electron, positron, photon, config);
  const int dir = tunneling_direction(config, photon);

  TunnelingSolution s;
  s.electron = electron;
  s.creation.x_s = electron.x + dir * uu.first;
  s.creation.m_star = effective_mass(electron.p_y, config);
  positron.x = s.creation.x_s + dir * uu.second;
  s.positron = positron;
  s.extent_minus = uu.first;
  s.extent_plus = uu.second;
  return s;
}

}  // namespace

TunnelingSolution assemble_solution(const ExitState& electron,
                                    const PhotonState& photon,
                                    const FieldConfig& config) {
  const ExitState positron = solve_positron_exit(electron, photon, config);
  return finish_assembly(electron, positron, photon, config);
}

TunnelingSolution assemble_solution(const ExitState& electron,
                                    const ExitState& positron,
                                    const PhotonState& photon,
                                    const FieldConfig& config) {
  validate(config);
  validate(photon);
  // the supplied pair must actually satisfy the creation constraint
  const double res =
      config.B * (electron.p_0 + positron.p_0 - photon.k0) -
      config.E * (electron.p_z + positron.p_z - photon.kz());
  const double scale =
      (std::abs(config.B) + std::abs(config.E)) *
          (electron.p_0 + positron.p_0 + photon.k0 + std::abs(electron.p_z) +
           std::abs(positron.p_z)) +
      1e-300;
  if (std::abs(res) > 1e-10 * scale)
    throw physics_error(reason::inconsistent_solution,
                        "exit momenta violate the creation constraint");
  return finish_assembly(electron, positron, photon, config);
}

BoostedSetup boost_z(const FieldConfig& config, const PhotonState& photon,
                     const ExitState& electron, const ExitState& positron,
                     double rapidity) {
  validate(config);
  validate(photon);
  if (!std::isfinite(rapidity))
    throw std::invalid_argument("rapidity must be finite");
  const double g = std::cosh(rapidity);
  const double v = std::tanh(rapidity);

  BoostedSetup out;
  out.config = config;
  out.config.E = g * (config.E - v * config.B);
  out.config.B = g * (config.B - v * config.E);

  out.photon = photon;
  out.photon.k0 = g * (photon.k0 - v * photon.kz());  // kz_sign is preserved

  const auto boost_exit = [&](const ExitState& s) {
    ExitState b = s;  // p_y and x are transverse/invariant
    b.p_0 = g * (s.p_0 - v * s.p_z);
    b.p_z = g * (s.p_z - v * s.p_0);
    return b;
  };
  out.electron = boost_exit(electron);
  out.positron = boost_exit(positron);
  return out;
}

}  // namespace pairgate
