#include "pairgate/maxprob.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "pairgate/detail/numerics.hpp"
#include "pairgate/sweep.hpp"

namespace pairgate {

namespace {

// Symmetric stationarity condition S(pz) = B(2 sqrt(m^2+pz^2) - k0)
// - E(2 pz - kz): the creation constraint specialized to p_z = q_z, p_y = 0.
std::vector<double> symmetric_roots(const FieldConfig& config,
                                    const PhotonState& photon) {
  const double E = config.E, B = config.B, m = config.m;
  const double k0 = photon.k0, kz = photon.kz();
  const auto S = [&](double pz) {
    return B * (2.0 * std::hypot(m, pz) - k0) - E * (2.0 * pz - kz);
  };
  std::vector<double> roots;

  if (B == 0.0) {
    roots.push_back(0.5 * kz);  // each particle takes half the photon momentum
  } else if (E == 0.0) {
    if (k0 < 2.0 * m) return roots;  // below the pair threshold
    const double r = std::sqrt(std::max(0.0, 0.25 * k0 * k0 - m * m));
    roots.push_back(-r);
    if (r > 0.0) roots.push_back(r);
  } else if (std::abs(E) == std::abs(B)) {
    // light-like: S is linear in (P -+ pz)
    if (B == E) {
      const double h = 0.5 * (k0 - kz);
      if (h > 0.0) roots.push_back((m * m - h * h) / (2.0 * h));
    } else {
      const double h = 0.5 * (k0 + kz);
      if (h > 0.0) roots.push_back((h * h - m * m) / (2.0 * h));
    }
  } else if (std::abs(B) < std::abs(E)) {
    // strictly monotone: exactly one root
    double L = 10.0 * std::max({m, k0, 1.0});
    double gl = S(-L), gr = S(L);
    int grow = 0;
    while (gl * gr > 0.0 && grow++ < 60) {
      L *= 2.0;
      gl = S(-L);
      gr = S(L);
    }
    if (gl * gr <= 0.0) roots.push_back(detail::brent_root(S, -L, L, gl, gr));
  } else {
    // |B| > |E| > 0: single extremum, zero to two roots
    const double r = E / B;
    const double pstar = m * r / std::sqrt(1.0 - r * r);
    const double gstar = S(pstar);
    const double scale = std::abs(B) * (m + k0) + std::abs(E) * (m + k0);
    if (std::abs(gstar) <= 1e-13 * scale) {
      roots.push_back(pstar);
    } else {
      const bool minimum = B > 0.0;
      if ((minimum && gstar > 0.0) || (!minimum && gstar < 0.0)) return roots;
      double L = std::abs(pstar) + 10.0 * std::max({m, k0, 1.0});
      int grow = 0;
      while (S(-L) * gstar > 0.0 && grow++ < 60) L *= 2.0;
      if (S(-L) * gstar < 0.0) roots.push_back(detail::brent_root(S, -L, pstar));
      L = std::abs(pstar) + 10.0 * std::max({m, k0, 1.0});
      grow = 0;
      while (S(L) * gstar > 0.0 && grow++ < 60) L *= 2.0;
      if (S(L) * gstar < 0.0) roots.push_back(detail::brent_root(S, pstar, L));
    }
  }
  return roots;
}

}  // namespace

MaxProbResult most_probable_exit(const FieldConfig& config,
                                 const PhotonState& photon) {
  validate(config);
  validate(photon);
  MaxProbResult out;
  out.k0 = photon.k0;

  const Regime regime = classify_regime(config);  // no_field propagates
  if (regime == Regime::light_like && photon.k0 == 0.0) {
    out.fail = reason::infinite_suppression;
    return out;
  }

  for (double pz : symmetric_roots(config, photon)) {
    try {
      const ExitState el = make_exit_state(0.0, pz, config);
      const ExitState po = make_exit_state(0.0, pz, config);
      TunnelingSolution sol = assemble_solution(el, po, photon, config);
      const ExponentResult res = probability_exponent(sol, config, photon);
      if (!out.feasible || res.probability_exponent < out.exponent) {
        out.feasible = true;
        out.p_z = pz;
        out.exponent = res.probability_exponent;
        out.solution = sol;
      }
    } catch (const physics_error& err) {
      // wrong mass-shell crossing or blocked direction: not a candidate
      if (!out.feasible) out.fail = err.why();
    }
  }
  return out;
}

namespace {

// Scan convention: photon along +z; the assisting magnetic orientation for
// beta in [0, 1] is B = -beta E (the mirror image of B = +beta E with a -z
// photon; exponents are identical, reported p_z follows the +z photon).
FieldConfig scan_config(double E_fixed, double beta) {
  FieldConfig c;
  c.E = E_fixed;
  c.B = -beta * E_fixed;
  return c;
}

PhotonState scan_photon(double k0) {
  PhotonState p;
  p.k0 = k0;
  p.kz_sign = k0 > 0.0 ? 1 : 0;
  return p;
}

template <class ForIndex>
std::vector<MaxProbResult> sweep_beta_impl(double E_fixed, double k0,
                                           const std::vector<double>& betas,
                                           ForIndex&& for_index) {
  std::vector<MaxProbResult> out(betas.size());
  for_index(betas.size(), [&](std::size_t i) {
    MaxProbResult r;
    try {
      r = most_probable_exit(scan_config(E_fixed, betas[i]), scan_photon(k0));
    } catch (const physics_error& err) {
      r.fail = err.why();
    }
    r.beta = betas[i];
    r.k0 = k0;
    out[i] = r;
  });
  return out;
}

}  // namespace

std::vector<MaxProbResult> sweep_beta(double E_fixed, double k0,
                                      const std::vector<double>& betas) {
  return sweep_beta_impl(E_fixed, k0, betas,
                         [](std::size_t n, auto&& fn) {
                           parallel_for_index(n, fn);
                         });
}

std::vector<MaxProbResult> sweep_beta_serial(double E_fixed, double k0,
                                             const std::vector<double>& betas) {
  return sweep_beta_impl(E_fixed, k0, betas,
                         [](std::size_t n, auto&& fn) {
                           serial_for_index(n, fn);
                         });
}

OptimalBeta optimal_beta(double E_fixed, double k0, double beta_tol) {
  const PhotonState photon = scan_photon(k0);
  const auto objective = [&](double beta) {
    try {
      const MaxProbResult r =
          most_probable_exit(scan_config(E_fixed, beta), photon);
      return r.feasible ? r.exponent
                        : std::numeric_limits<double>::infinity();
    } catch (const physics_error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const auto [beta, exponent] = detail::golden_min(objective, 0.0, 1.0, beta_tol);
  return {beta, exponent};
}

double critical_photon_momentum(double E_fixed, double k0_tol) {
  const double m = FieldConfig{}.m;
  // below k0* the optimum sits strictly inside (0, 1); at and above it the
  // golden bracket collapses onto the plane-wave boundary
  const auto at_boundary = [&](double k0) {
    return optimal_beta(E_fixed, k0).beta >= 1.0 - 2e-5;
  };
  double lo = 0.1 * m, hi = 1.5 * m;
  if (at_boundary(lo)) return lo;
  if (!at_boundary(hi))
    throw physics_error(reason::no_saddle_in_bracket,
                        "plane-wave optimum not reached by k0 = 1.5 m");
  while (hi - lo > k0_tol * m) {
    const double mid = 0.5 * (lo + hi);
    (at_boundary(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace pairgate
