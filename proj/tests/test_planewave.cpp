#include <cmath>
#include <complex>

#include "doctest.h"
#include "pairgate/exponent.hpp"
#include "pairgate/fields.hpp"
#include "pairgate/planewave.hpp"

using namespace pairgate;

namespace {

constexpr double pi = 3.14159265358979323846;

PlaneWaveSetup symmetric(double E0, double xi, double k0, PulseShape pulse) {
  return make_symmetric_setup(E0, E0 / xi, k0, std::move(pulse));
}

}  // namespace

TEST_CASE("pulse shapes: derivative consistency and local inversion") {
  for (const PulseShape& pulse : {PulseShape::sinusoid(), PulseShape::linear()}) {
    for (const double eta : {-1.2, 0.0, 0.7, 2.9}) {
      const double h = 1e-6;
      const double fd =
          (pulse.f(eta + h).real() - pulse.f(eta - h).real()) / (2.0 * h);
      CHECK(std::abs(fd - pulse.f_prime(eta).real()) < 1e-6);
      const double target = pulse.f(eta).real();
      CHECK(pulse.f(pulse.inverse_near(target, eta)).real() ==
            doctest::Approx(target).epsilon(1e-12));
    }
  }
  // the sinusoid picks the branch nearest the guess
  const PulseShape sin_pulse = PulseShape::sinusoid();
  CHECK(sin_pulse.inverse_near(0.0, 6.0) == doctest::Approx(2.0 * pi));
  CHECK(sin_pulse.inverse_near(0.5, 3.0) == doctest::Approx(pi - pi / 6.0));
  CHECK_THROWS_WITH_AS(sin_pulse.inverse_near(1.5, 0.0),
                       doctest::Contains("no saddle in bracket"),
                       physics_error);
}

TEST_CASE("setup validation") {
  PlaneWaveSetup s = symmetric(0.05, 100.0, 0.5, PulseShape::sinusoid());
  CHECK_NOTHROW(validate(s));
  CHECK(xi_parameter(s) == doctest::Approx(100.0));
  CHECK(effective_mass(s) == doctest::Approx(1.0));

  SUBCASE("non-positive light-front momentum") {
    s.electron.lambda = -s.electron.lambda;
    CHECK_THROWS_WITH_AS(validate(s),
                         doctest::Contains("light-front momentum"),
                         physics_error);
  }
  SUBCASE("broken conservation") {
    s.electron.lambda *= 1.5;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
  }
  SUBCASE("unbalanced transverse momenta") {
    s.electron.P_x = 0.3;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
  }
  SUBCASE("quasistatic parameter too small") {
    s.omega_L *= 1000.0;  // xi drops to 0.1
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
  }
}

TEST_CASE("perturbative saddle point") {
  SUBCASE("sinusoid at zero transverse momentum") {
    const SaddlePoint s =
        solve_eta_s_perturbative(symmetric(0.05, 100.0, 0.5,
                                           PulseShape::sinusoid()));
    CHECK(s.eta0 == doctest::Approx(0.0));
    CHECK(s.eta1.real() == doctest::Approx(0.0));
    CHECK(s.eta1.imag() == doctest::Approx(-1.0));
  }
  SUBCASE("linear pulse") {
    const SaddlePoint s = solve_eta_s_perturbative(
        symmetric(0.05, 100.0, 0.5, PulseShape::linear()));
    CHECK(s.eta0 == doctest::Approx(0.0));
    CHECK(std::abs(s.eta1 - std::complex<double>{0.0, -1.0}) < 1e-12);
  }
  SUBCASE("offset crossing on the sinusoid") {
    PlaneWaveSetup s = symmetric(0.05, 100.0, 0.5, PulseShape::sinusoid());
    s.electron.P_x = 0.5 * s.e * s.E0 / s.omega_L;
    s.positron.P_x = -s.electron.P_x;
    const SaddlePoint sp = solve_eta_s_perturbative(s);
    CHECK(sp.eta0 == doctest::Approx(pi / 6.0));
    CHECK(std::abs(sp.eta1.imag()) ==
          doctest::Approx(1.0 / std::cos(pi / 6.0)));
  }
  SUBCASE("crest of the pulse is degenerate") {
    PlaneWaveSetup s = symmetric(0.05, 100.0, 0.5, PulseShape::sinusoid());
    s.electron.P_x = s.e * s.E0 / s.omega_L;  // f(eta0) = 1, f'(eta0) = 0
    s.positron.P_x = -s.electron.P_x;
    CHECK_THROWS_WITH_AS(solve_eta_s_perturbative(s),
                         doctest::Contains("degenerate pulse point"),
                         physics_error);
  }
}

TEST_CASE("perturbative exponent: symmetric value and lambda scaling") {
  const PlaneWaveSetup s = symmetric(0.05, 100.0, 0.5, PulseShape::sinusoid());
  const std::complex<double> w = sigma_w_perturbative(s);
  CHECK(w.real() == doctest::Approx(0.0));
  CHECK(2.0 * w.imag() ==
        doctest::Approx(4.0 / (3.0 * 0.5 * 0.05)).epsilon(1e-12));

  // each particle term scales as 1/lambda
  PlaneWaveSetup lopsided = s;
  lopsided.electron.lambda *= 4.0;
  lopsided.lambda_k = lopsided.electron.lambda + lopsided.positron.lambda;
  const double expect = w.imag() / 2.0 * (0.25 + 1.0);
  CHECK(sigma_w_perturbative(lopsided).imag() ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("contour exponent: linear pulse equals the crossed-field closed form") {
  const double E0 = 0.05, k0 = 0.5;
  const ContourResult cont =
      sigma_w_contour(symmetric(E0, 100.0, k0, PulseShape::linear()));

  // matched constant crossed field: light-like E = B = E0, photon against it
  FieldConfig config;
  config.E = E0;
  config.B = E0;
  PhotonState photon;
  photon.k0 = k0;
  photon.kz_sign = -1;
  const double pz = (1.0 - k0 * k0) / (2.0 * k0);
  TunnelingSolution sol =
      assemble_solution(make_exit_state(0.0, pz, config), photon, config);
  const ExponentResult closed = probability_exponent(sol, config, photon);

  CHECK(std::abs(cont.sigma_w.imag() - closed.total_im) <
        1e-8 / (config.e * E0));
  CHECK(cont.sigma_w.imag() > 0.0);
  CHECK(cont.eta_s.imag() < 0.0);  // lower half-plane saddle, conjugated once
}

TEST_CASE("contour exponent: sinusoid converges to the perturbative value") {
  double previous = 1.0;
  for (const double xi : {25.0, 50.0, 100.0}) {
    const PlaneWaveSetup s = symmetric(0.05, xi, 0.5, PulseShape::sinusoid());
    const std::complex<double> pert = sigma_w_perturbative(s);
    const ContourResult cont = sigma_w_contour(s);
    const double rel = std::abs(cont.sigma_w - pert) / std::abs(cont.sigma_w);
    CHECK(cont.sigma_w.imag() > 0.0);
    CHECK(rel < previous);  // strictly shrinking deviation
    CHECK(rel < 10.0 / (xi * xi));
    previous = rel;
  }
}
