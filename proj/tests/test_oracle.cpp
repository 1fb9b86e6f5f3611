#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "pairgate/exponent.hpp"
#include "pairgate/fields.hpp"
#include "pairgate/oracle.hpp"

using namespace pairgate;

namespace {

constexpr double pi = 3.14159265358979323846;

FieldConfig make_config(double E, double B) {
  FieldConfig c;
  c.E = E;
  c.B = B;
  return c;
}

PhotonState make_photon(double k0, int kz_sign) {
  PhotonState p;
  p.k0 = k0;
  p.kz_sign = kz_sign;
  return p;
}

TunnelingSolution assemble(double E, double B, double k0, int kz, double p_y,
                           double p_z) {
  const FieldConfig config = make_config(E, B);
  return assemble_solution(make_exit_state(p_y, p_z, config),
                           make_photon(k0, kz), config);
}

}  // namespace

TEST_CASE("quadrature reproduces the vacuum exponent split") {
  const TunnelingSolution s = assemble(0.05, 0.0, 0.0, 0, 0.0, 0.0);
  const OracleResult r = integrate_w(s, make_config(0.05, 0.0));
  CHECK(r.w_minus_im == doctest::Approx(pi / 0.2).epsilon(1e-8));
  CHECK(r.w_plus_im == doctest::Approx(pi / 0.2).epsilon(1e-8));
  CHECK(r.error_minus < 1e-9);
  CHECK(r.error_plus < 1e-9);
}

TEST_CASE("closed forms and quadrature agree across regimes") {
  struct Case {
    double E, B, k0;
    int kz;
    double p_y, p_z;
  };
  const Case cases[] = {
      {0.05, 0.0, 0.0, 0, 0.0, 0.0},     // vacuum electric
      {0.05, 0.03, 0.0, 0, 0.0, 0.75},   // crossed, no photon
      {0.1, -0.04, 0.5, -1, 0.2, -0.3},  // crossed, photon, transverse
      {0.05, 0.05, 0.5, -1, 0.0, 0.75},  // light-like
      {0.0, 0.1, 2.2, -1, 0.0, 0.0},     // magnetic-dominated
      {0.04, 0.1, 2.4, -1, 0.0, 0.2},    // magnetic-dominated, mixed
  };
  for (const Case& c : cases) {
    CAPTURE(c.E);
    CAPTURE(c.B);
    CAPTURE(c.k0);
    const FieldConfig config = make_config(c.E, c.B);
    const PhotonState photon = make_photon(c.k0, c.kz);
    TunnelingSolution s = assemble(c.E, c.B, c.k0, c.kz, c.p_y, c.p_z);
    const ExponentResult closed = probability_exponent(s, config, photon);
    const OracleResult oracle = integrate_w(s, config);
    const double total = oracle.w_minus_im + oracle.w_plus_im;
    CHECK(total == doctest::Approx(closed.total_im).epsilon(1e-8));
    CHECK(oracle.w_minus_im ==
          doctest::Approx(closed.w_minus.imag()).epsilon(1e-7));
  }
}

TEST_CASE("tampered extents are rejected as non-tunneling segments") {
  TunnelingSolution s = assemble(0.05, 0.0, 0.0, 0, 0.0, 0.0);
  s.extent_minus = 50.0;  // runs past the far mass shell, p_x^2 > 0 inside
  CHECK_THROWS_WITH_AS(integrate_w(s, make_config(0.05, 0.0)),
                       doctest::Contains("not a tunneling segment"),
                       physics_error);
}

TEST_CASE("picture sampling: grid, markers and energy columns") {
  const FieldConfig config = make_config(0.05, 0.0);
  TunnelingSolution s = assemble(0.05, 0.0, 0.0, 0, 0.0, 0.0);
  const PictureData d = emit_picture(s, config, 101);

  REQUIRE(d.x.size() == 101);
  CHECK(d.x.front() == doctest::Approx(0.0));
  CHECK(d.x.back() == doctest::Approx(40.0));
  CHECK(d.x_exit_minus == doctest::Approx(0.0));
  CHECK(d.x_creation == doctest::Approx(20.0));
  CHECK(d.x_exit_plus == doctest::Approx(40.0));

  for (std::size_t i = 0; i < d.x.size(); ++i) {
    // no magnetic field: pseudoenergy columns stay flat at m
    CHECK(d.electron_pseudo[i] == doctest::Approx(1.0));
    CHECK(d.positron_pseudo[i] == doctest::Approx(1.0));
    // kinetic lines are linear with slope -+ eE
    CHECK(d.electron_kinetic[i] == doctest::Approx(1.0 - 0.05 * d.x[i]));
    // p_z never moves, so the z trajectory stays real
    CHECK(d.electron_im_z[i] == doctest::Approx(0.0));
  }
  // the measure vanishes at the exit and is positive under the barrier
  CHECK(d.electron_measure.front() == doctest::Approx(0.0));
  CHECK(d.electron_measure[50] > 0.0);
  CHECK(d.positron_measure.back() == doctest::Approx(0.0));

  CHECK_THROWS_AS(emit_picture(s, config, 1), std::invalid_argument);
}

TEST_CASE("imaginary z accumulates antisymmetrically for symmetric exits") {
  const FieldConfig config = make_config(0.05, 0.03);
  TunnelingSolution s = assemble(0.05, 0.03, 0.0, 0, 0.0, 0.75);
  const PictureData d = emit_picture(s, config, 201);

  // both anchored at their own exits
  CHECK(d.electron_im_z.front() == doctest::Approx(0.0));
  CHECK(d.positron_im_z.back() == doctest::Approx(0.0));

  // antisymmetric meeting at the creation point, held beyond the segment
  std::size_t ic = 0;
  for (std::size_t i = 0; i < d.x.size(); ++i)
    if (std::abs(d.x[i] - d.x_creation) < std::abs(d.x[ic] - d.x_creation))
      ic = i;
  CHECK(d.electron_im_z[ic] != doctest::Approx(0.0));
  CHECK(d.electron_im_z[ic] ==
        doctest::Approx(-d.positron_im_z[ic]).epsilon(1e-6));
  CHECK(d.electron_im_z.back() == doctest::Approx(d.electron_im_z[ic]));
}

TEST_CASE("halving the quadrature tolerance moves the result less than the "
          "reported error") {
  const FieldConfig config = make_config(0.1, -0.04);
  const PhotonState photon = make_photon(0.5, -1);
  const TunnelingSolution sol =
      assemble_solution(make_exit_state(0.2, -0.3, config), photon, config);

  double tol = 1e-6;
  OracleResult prev = integrate_w(sol, config, tol);
  for (int step = 0; step < 4; ++step) {
    tol *= 0.5;
    const OracleResult next = integrate_w(sol, config, tol);
    CHECK(std::abs(next.w_minus_im - prev.w_minus_im) <=
          std::max(prev.error_minus, 1e-15));
    CHECK(std::abs(next.w_plus_im - prev.w_plus_im) <=
          std::max(prev.error_plus, 1e-15));
    CHECK(prev.error_minus <= tol * 2.0);
    CHECK(prev.error_plus <= tol * 2.0);
    prev = next;
  }
}
