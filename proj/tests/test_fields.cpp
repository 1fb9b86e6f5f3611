#include <cmath>

#include "doctest.h"
#include "pairgate/fields.hpp"

using namespace pairgate;

namespace {

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

}  // namespace

TEST_CASE("regime classification with light-like tolerance band") {
  CHECK(classify_regime(make_config(0.05, 0.0)) == Regime::e_dominated);
  CHECK(classify_regime(make_config(-0.05, 0.03)) == Regime::e_dominated);
  CHECK(classify_regime(make_config(0.0, 0.05)) == Regime::b_dominated);
  CHECK(classify_regime(make_config(0.05, 0.05)) == Regime::light_like);
  CHECK(classify_regime(make_config(0.05, -0.05)) == Regime::light_like);
  CHECK(classify_regime(make_config(0.05, 0.05 * (1.0 + 1e-10))) ==
        Regime::light_like);
  CHECK(classify_regime(make_config(0.05, 0.05 * (1.0 + 1e-4))) ==
        Regime::b_dominated);
  CHECK_THROWS_AS(classify_regime(make_config(0.0, 0.0)), physics_error);
}

TEST_CASE("config and photon validation") {
  FieldConfig bad = make_config(0.05, 0.0);
  bad.m = -1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = make_config(1.0 / 0.0, 0.0);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  CHECK_THROWS_AS(validate(make_photon(0.5, 0)), std::invalid_argument);
  CHECK_THROWS_AS(validate(make_photon(-0.5, 1)), std::invalid_argument);
  CHECK_NOTHROW(validate(make_photon(0.0, 0)));
  CHECK_NOTHROW(validate(make_photon(0.5, -1)));
}

TEST_CASE("invariant field strength") {
  CHECK(invariant_strength(make_config(0.05, 0.03)) == doctest::Approx(0.04));
  CHECK(invariant_strength(make_config(0.03, 0.05)) == doctest::Approx(0.04));
  CHECK(invariant_strength(make_config(0.05, 0.05)) == doctest::Approx(0.0));
}

TEST_CASE("exit state shell and linear momentum evolution") {
  const FieldConfig config = make_config(0.05, 0.0);
  const ExitState exit = make_exit_state(0.0, 0.0, config);
  CHECK(exit.p_0 == doctest::Approx(1.0));

  // electron loses energy moving up the field: p0 hits zero at x = m/(eE)
  const Momentum at_top = momentum_at(20.0, exit, config, Species::electron);
  CHECK(at_top.p0 == doctest::Approx(0.0));
  CHECK(at_top.px_squared == doctest::Approx(-1.0));
  const Momentum at_exit = momentum_at(0.0, exit, config, Species::electron);
  CHECK(at_exit.px_squared == doctest::Approx(0.0));

  // positron gains
  const Momentum pos = momentum_at(20.0, exit, config, Species::positron);
  CHECK(pos.p0 == doctest::Approx(2.0));

  const ExitState with_pt = make_exit_state(0.3, 0.4, config);
  CHECK(with_pt.p_0 ==
        doctest::Approx(std::sqrt(1.0 + 0.3 * 0.3 + 0.4 * 0.4)));
}

TEST_CASE("tunneling direction by regime") {
  CHECK(tunneling_direction(make_config(0.05, 0.0), make_photon(0, 0)) == 1);
  CHECK(tunneling_direction(make_config(-0.05, 0.0), make_photon(0, 0)) == -1);
  CHECK(tunneling_direction(make_config(0.05, 0.05), make_photon(0.5, -1)) ==
        1);
  // magnetic-dominated moves against B kz and demands a photon
  CHECK(tunneling_direction(make_config(0.0, 0.1), make_photon(2.2, -1)) == 1);
  CHECK(tunneling_direction(make_config(0.0, 0.1), make_photon(2.2, 1)) == -1);
  CHECK_THROWS_AS(tunneling_direction(make_config(0.0, 0.1), make_photon(0, 0)),
                  physics_error);
}

TEST_CASE("barrier extents: pure electric field, rest exits") {
  const FieldConfig config = make_config(0.05, 0.0);
  const ExitState e = make_exit_state(0.0, 0.0, config);
  const auto uu = trajectory_extents(e, e, make_photon(0, 0), config);
  CHECK(uu.first == doctest::Approx(20.0));
  CHECK(uu.second == doctest::Approx(20.0));
}

TEST_CASE("barrier extents: photon-assisted and degenerate denominator") {
  const FieldConfig config = make_config(0.05, 0.0);
  const ExitState e = make_exit_state(0.0, 0.0, config);
  const auto uu = trajectory_extents(e, e, make_photon(0.5, -1), config);
  // B = 0: (k0 p0 - kz pz)/(e E k0) = p0/(eE) for a rest exit
  CHECK(uu.first == doctest::Approx(20.0));

  // light-like copropagating photon: E k0 - B kz = 0
  const FieldConfig ll = make_config(0.05, 0.05);
  CHECK_THROWS_WITH_AS(
      trajectory_extents(e, e, make_photon(0.5, 1), ll),
      doctest::Contains("degenerate kinematics"), physics_error);
}

TEST_CASE("positron exit: closed forms per field pattern") {
  SUBCASE("pure electric: z-momentum conservation") {
    const FieldConfig config = make_config(0.05, 0.0);
    const ExitState e = make_exit_state(0.0, 0.2, config);
    const ExitState p = solve_positron_exit(e, make_photon(0.5, -1), config);
    CHECK(p.p_z == doctest::Approx(-0.5 - 0.2));
  }
  SUBCASE("pure magnetic: energy splitting above threshold") {
    const FieldConfig config = make_config(0.0, 0.1);
    const ExitState e = make_exit_state(0.0, 0.0, config);
    const ExitState p = solve_positron_exit(e, make_photon(2.2, -1), config);
    CHECK(p.p_0 == doctest::Approx(1.2));
    CHECK(p.p_z == doctest::Approx(-std::sqrt(1.2 * 1.2 - 1.0)));
    CHECK_THROWS_WITH_AS(
        solve_positron_exit(e, make_photon(1.9, -1), config),
        doctest::Contains("kinematically forbidden"), physics_error);
  }
  SUBCASE("light-like: linear light-front budget") {
    const FieldConfig config = make_config(0.05, 0.05);
    const ExitState e = make_exit_state(0.0, 0.75, config);
    const ExitState p = solve_positron_exit(e, make_photon(0.5, -1), config);
    CHECK(p.p_z == doctest::Approx(0.75));  // symmetric point maps to itself
    CHECK_THROWS_AS(solve_positron_exit(e, make_photon(0.0, 0), config),
                    physics_error);
  }
  SUBCASE("mixed electric-dominated: single monotone root") {
    const FieldConfig config = make_config(0.05, 0.02);
    const ExitState e = make_exit_state(0.1, 0.3, config);
    const ExitState p = solve_positron_exit(e, make_photon(0.5, -1), config);
    // residual of the creation constraint at the returned root
    const double res = config.B * (e.p_0 + p.p_0 - 0.5) -
                       config.E * (e.p_z + p.p_z + 0.5);
    CHECK(std::abs(res) < 1e-12);
    CHECK(p.p_y == doctest::Approx(-0.1));
  }
}

TEST_CASE("assembled geometry anchors the electron exit") {
  const FieldConfig config = make_config(0.05, 0.0);
  const ExitState e = make_exit_state(0.0, 0.0, config);
  const TunnelingSolution s = assemble_solution(e, make_photon(0, 0), config);
  CHECK(s.electron.x == doctest::Approx(0.0));
  CHECK(s.creation.x_s == doctest::Approx(20.0));
  CHECK(s.positron.x == doctest::Approx(40.0));
  CHECK(s.creation.m_star == doctest::Approx(1.0));
  CHECK(s.extent_minus == doctest::Approx(20.0));
  CHECK(s.extent_plus == doctest::Approx(20.0));
}

TEST_CASE("supplied positron exit must satisfy the creation constraint") {
  const FieldConfig config = make_config(0.05, 0.02);
  const ExitState e = make_exit_state(0.0, 0.3, config);
  const PhotonState photon = make_photon(0.5, -1);
  const ExitState good = solve_positron_exit(e, photon, config);
  CHECK_NOTHROW(assemble_solution(e, good, photon, config));
  ExitState bad = good;
  bad.p_z += 0.1;
  bad.p_0 = make_exit_state(bad.p_y, bad.p_z, config).p_0;
  CHECK_THROWS_WITH_AS(assemble_solution(e, bad, photon, config),
                       doctest::Contains("inconsistent solution"),
                       physics_error);
}

TEST_CASE("boost along z: fields, photon and exits transform covariantly") {
  const FieldConfig config = make_config(0.05, 0.0);
  const ExitState e = make_exit_state(0.0, 0.0, config);
  const TunnelingSolution lab = assemble_solution(e, make_photon(0, 0), config);

  const double v = -3.0 / 5.0;
  const BoostedSetup b =
      boost_z(config, make_photon(0, 0), lab.electron, lab.positron,
              std::atanh(v));
  CHECK(b.config.E == doctest::Approx(0.0625));
  CHECK(b.config.B == doctest::Approx(0.0375));
  CHECK(invariant_strength(b.config) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(b.electron.p_0 * b.electron.p_0 - b.electron.p_z * b.electron.p_z ==
        doctest::Approx(1.0).epsilon(1e-12));

  // the assembled geometry in the boosted frame keeps the same exit x
  const TunnelingSolution moving =
      assemble_solution(b.electron, b.positron, b.photon, b.config);
  CHECK(moving.electron.x == doctest::Approx(lab.electron.x).epsilon(1e-12));
  CHECK(moving.positron.x == doctest::Approx(lab.positron.x).epsilon(1e-12));
  CHECK(moving.creation.x_s == doctest::Approx(lab.creation.x_s).epsilon(1e-12));
}

TEST_CASE("p_x^2 stays negative strictly inside each tunneling segment") {
  // mixed fields, transverse momentum, photon: a thoroughly generic segment
  const FieldConfig config = make_config(0.1, -0.04);
  const PhotonState photon = make_photon(0.5, -1);
  const ExitState electron = make_exit_state(0.2, -0.3, config);
  const TunnelingSolution sol = assemble_solution(electron, photon, config);

  const auto sweep_segment = [&](const ExitState& exit, Species species) {
    // exactly on-shell at the exit, forbidden at 150 interior points
    CHECK(momentum_at(exit.x, exit, config, species).px_squared ==
          doctest::Approx(0.0).epsilon(1e-12));
    for (int i = 1; i < 150; ++i) {
      const double x =
          exit.x + (sol.creation.x_s - exit.x) * i / 150.0;
      CHECK(momentum_at(x, exit, config, species).px_squared < 0.0);
    }
  };
  sweep_segment(sol.electron, Species::electron);
  sweep_segment(sol.positron, Species::positron);
}

TEST_CASE("extents are continuous in the soft-photon limit") {
  const FieldConfig config = make_config(0.05, 0.02);
  const ExitState electron = make_exit_state(0.0, 0.3, config);
  for (const int s : {1, -1}) {
    const ExitState po0 =
        solve_positron_exit(electron, make_photon(0.0, s), config);
    const auto u0 =
        trajectory_extents(electron, po0, make_photon(0.0, s), config);
    const PhotonState soft = make_photon(1e-8, s);
    const ExitState po1 = solve_positron_exit(electron, soft, config);
    const auto u1 = trajectory_extents(electron, po1, soft, config);
    CHECK(u1.first == doctest::Approx(u0.first).epsilon(1e-6));
    CHECK(u1.second == doctest::Approx(u0.second).epsilon(1e-6));
  }
}
