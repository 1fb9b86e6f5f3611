#include "pairgate/planewave.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pairgate/detail/numerics.hpp"

namespace pairgate {

PulseShape PulseShape::sinusoid() {
  PulseShape p;
  p.name = "sin";
  p.f = [](std::complex<double> z) { return std::sin(z); };
  p.f_prime = [](std::complex<double> z) { return std::cos(z); };
  p.inverse_near = [](double target, double guess) {
    if (std::abs(target) > 1.0)
      throw physics_error(reason::no_saddle_in_bracket,
                          "sin pulse never reaches the requested value");
    // pick the analytic branch (asin or pi - asin, shifted by 2 pi n)
    // closest to the guess
    const double principal = std::asin(target);
    constexpr double twopi = 2.0 * M_PI;
    double best = principal, best_d = std::numeric_limits<double>::infinity();
    for (const double base : {principal, M_PI - principal}) {
      const double cand = base + twopi * std::round((guess - base) / twopi);
      if (std::abs(cand - guess) < best_d) {
        best_d = std::abs(cand - guess);
        best = cand;
      }
    }
    return best;
  };
  return p;
}

PulseShape PulseShape::linear() {
  PulseShape p;
  p.name = "linear";
  p.f = [](std::complex<double> z) { return z; };
  p.f_prime = [](std::complex<double>) { return std::complex<double>{1.0, 0.0}; };
  p.inverse_near = [](double target, double) { return target; };
  return p;
}

PlaneWaveSetup make_symmetric_setup(double E0, double omega_L, double k0,
                                    PulseShape pulse, double m, double e) {
  PlaneWaveSetup s;
  s.E0 = E0;
  s.omega_L = omega_L;
  s.pulse = std::move(pulse);
  s.k0 = k0;
  s.lambda_k = 2.0 * omega_L * k0;  // counterpropagating: k_z = -k0
  s.e = e;
  s.m = m;
  s.electron = {0.0, 0.0, omega_L * k0};
  s.positron = {0.0, 0.0, omega_L * k0};
  return s;
}

void validate(const PlaneWaveSetup& setup) {
  if (!std::isfinite(setup.E0) || setup.E0 == 0.0)
    throw std::invalid_argument("peak field E0 must be finite and nonzero");
  if (!(setup.omega_L > 0.0) || !std::isfinite(setup.omega_L))
    throw std::invalid_argument("omega_L must be positive");
  if (!(setup.m > 0.0) || !(setup.e > 0.0))
    throw std::invalid_argument("m and e must be positive");
  if (!setup.pulse.f || !setup.pulse.f_prime || !setup.pulse.inverse_near)
    throw std::invalid_argument("pulse shape callbacks must all be set");
  if (!(setup.electron.lambda > 0.0) || !(setup.positron.lambda > 0.0))
    throw physics_error(reason::unphysical_light_front_momentum);
  const double lam_scale =
      std::max({setup.lambda_k, setup.electron.lambda, setup.positron.lambda});
  if (std::abs(setup.electron.lambda + setup.positron.lambda - setup.lambda_k) >
      1e-12 * lam_scale)
    throw std::invalid_argument("light-front momenta do not sum to the photon's");
  const double p_scale = std::max(
      {1.0, std::abs(setup.electron.P_x), std::abs(setup.electron.p_y)});
  if (std::abs(setup.electron.P_x + setup.positron.P_x) > 1e-12 * p_scale ||
      std::abs(setup.electron.p_y + setup.positron.p_y) > 1e-12 * p_scale)
    throw std::invalid_argument("transverse momenta must sum to zero");
  if (!(xi_parameter(setup) > 1.0))
    throw std::invalid_argument(
        "xi = e E0 / (m_* omega_L) must exceed 1 for the quasistatic method");
}

double effective_mass(const PlaneWaveSetup& setup) {
  return std::hypot(setup.m, setup.electron.p_y);
}

double xi_parameter(const PlaneWaveSetup& setup) {
  return setup.e * std::abs(setup.E0) /
         (effective_mass(setup) * setup.omega_L);
}

SaddlePoint solve_eta_s_perturbative(const PlaneWaveSetup& setup) {
  validate(setup);
  const double target =
      setup.omega_L * setup.electron.P_x / (setup.e * setup.E0);
  const double eta0 = setup.pulse.inverse_near(target, 0.0);
  const double slope = std::abs(setup.pulse.f_prime(eta0));
  if (slope < 1e-12)
    throw physics_error(reason::degenerate_pulse_point);
  // lower half-plane branch; paired with +i m_* it gives Im sum W >= 0
  return {eta0, std::complex<double>{0.0, -1.0 / slope}};
}

std::complex<double> sigma_w_perturbative(const PlaneWaveSetup& setup) {
  const SaddlePoint s = solve_eta_s_perturbative(setup);
  const double mstar = effective_mass(setup);
  const double field =
      setup.e * std::abs(setup.E0 * setup.pulse.f_prime(s.eta0));
  const double amp = mstar * mstar * mstar * setup.omega_L / (3.0 * field) *
                     (1.0 / setup.electron.lambda + 1.0 / setup.positron.lambda);
  return {0.0, amp};
}

ContourResult sigma_w_contour(const PlaneWaveSetup& setup) {
  const SaddlePoint seed = solve_eta_s_perturbative(setup);
  const double mstar = effective_mass(setup);
  const double coef =
      0.5 / setup.electron.lambda + 0.5 / setup.positron.lambda;
  const double ratio = setup.e * setup.E0 / setup.omega_L;

  const auto px = [&](std::complex<double> eta) {
    return setup.electron.P_x - ratio * setup.pulse.f(eta);
  };
  // energy mismatch p0 + q0 - k0 in light-front form; zero at the saddle
  const auto mismatch = [&](std::complex<double> eta) {
    const std::complex<double> p = px(eta);
    return setup.omega_L * coef * (mstar * mstar + p * p);
  };
  const auto mismatch_prime = [&](std::complex<double> eta) {
    return setup.omega_L * coef * 2.0 * px(eta) *
           (-ratio * setup.pulse.f_prime(eta));
  };

  const double scale = setup.omega_L * coef * mstar * mstar;
  std::complex<double> eta_s;
  try {
    eta_s = detail::newton_complex(
        mismatch, mismatch_prime,
        std::complex<double>{seed.eta0, 0.0} + seed.eta1 / xi_parameter(setup),
        1e-12 * scale);
  } catch (const std::runtime_error& err) {
    throw physics_error(reason::saddle_not_found, err.what());
  }

  // straight vertical leg from the real axis up (or down) to the saddle
  const auto contour_integral = [&](std::complex<double> target) {
    const std::complex<double> start{target.real(), 0.0};
    const std::complex<double> span = target - start;
    std::vector<double> x, w;
    std::complex<double> prev{0.0, 0.0};
    for (const int n : {24, 48, 96, 192}) {
      detail::gauss_legendre(n, x, w);
      std::complex<double> acc{0.0, 0.0};
      for (int i = 0; i < n; ++i) {
        const std::complex<double> phi = start + 0.5 * (x[i] + 1.0) * span;
        const std::complex<double> p = px(phi);
        acc += w[i] * (mstar * mstar + p * p);
      }
      acc *= -coef * 0.5 * span;
      if (n > 24 && std::abs(acc - prev) <=
                        1e-13 * std::max(std::abs(acc), coef * mstar * mstar))
        return acc;
      prev = acc;
    }
    return prev;
  };

  std::complex<double> sigma = contour_integral(eta_s);
  if (sigma.imag() < 0.0) {
    // real pulses are real-analytic, so the conjugate saddle is the
    // suppression branch
    eta_s = std::conj(eta_s);
    sigma = std::conj(sigma);
  }
  return {sigma, eta_s};
}

}  // namespace pairgate
