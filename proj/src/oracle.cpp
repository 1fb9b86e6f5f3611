#include "pairgate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pairgate/detail/numerics.hpp"

namespace pairgate {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// One particle's barrier segment, parametrized from its exit toward the
// creation point by x(t) = x_exit + sigma t^2. The substitution makes the
// sqrt vanishing of |p_x| at the exit a smooth integrand.
struct Segment {
  const ExitState* exit;
  Species species;
  int sigma;       // sgn(x_s - x_exit)
  double t_max;    // sqrt(extent)
  double pos_tol;  // tolerance for "p_x^2 went positive inside"
};

Segment make_segment(const ExitState& exit, Species species, double x_s,
                     double extent, const FieldConfig& config) {
  Segment s;
  s.exit = &exit;
  s.species = species;
  s.sigma = sgn(x_s - exit.x);
  s.t_max = std::sqrt(std::max(extent, 0.0));
  const double ms = effective_mass(exit.p_y, config);
  s.pos_tol = 1e-9 * ms * ms;
  return s;
}

double im_px_at(const Segment& s, double t, const FieldConfig& config) {
  const double x = s.exit->x + s.sigma * t * t;
  const Momentum mom = momentum_at(x, *s.exit, config, s.species);
  if (mom.px_squared > s.pos_tol)
    throw physics_error(reason::not_a_tunneling_segment,
                        "p_x^2 positive inside the barrier");
  return std::sqrt(std::max(-mom.px_squared, 0.0));
}

detail::quad_result integrate_im_w(const Segment& s, const FieldConfig& config,
                                   double abs_tol) {
  if (s.t_max == 0.0) return {0.0, 0.0};
  return detail::integrate_adaptive(
      [&](double t) { return 2.0 * t * im_px_at(s, t, config); }, 0.0, s.t_max,
      abs_tol);
}

}  // namespace

OracleResult integrate_w(const TunnelingSolution& solution,
                         const FieldConfig& config, double abs_tol) {
  validate(config);
  if (abs_tol <= 0.0) abs_tol = 1e-10 * config.m * config.m;
  const Segment el = make_segment(solution.electron, Species::electron,
                                  solution.creation.x_s, solution.extent_minus,
                                  config);
  const Segment po = make_segment(solution.positron, Species::positron,
                                  solution.creation.x_s, solution.extent_plus,
                                  config);
  const auto re = integrate_im_w(el, config, abs_tol);
  const auto rp = integrate_im_w(po, config, abs_tol);
  return {re.value, rp.value, re.error, rp.error};
}

namespace {

// Cumulative Im z along one segment at the requested sample positions;
// samples off the segment hold the nearest end value (0 at the exit side).
// Sign: the electron's imaginary displacement integrates -p_z/|p_x|, the
// positron's +q_z/|q_x| (opposite branch of p_x), both anchored at their
// exits.
std::vector<double> im_z_column(const Segment& s, const FieldConfig& config,
                                const std::vector<double>& xs) {
  const double sign = s.species == Species::electron ? -1.0 : 1.0;
  const int n = static_cast<int>(xs.size());
  std::vector<double> t_of(n);
  for (int i = 0; i < n; ++i) {
    const double d = (xs[i] - s.exit->x) * s.sigma;  // >= 0 on the segment
    t_of[i] = std::sqrt(std::clamp(d, 0.0, s.t_max * s.t_max));
  }
  // integrate panels between consecutive distinct t values (ascending)
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t_of[a] < t_of[b]; });
  std::vector<double> out(n, 0.0);
  double t_prev = 0.0, acc = 0.0;
  for (int idx : order) {
    const double t = t_of[idx];
    if (t > t_prev) {
      const auto panel = detail::integrate_adaptive(
          [&](double tt) {
            const double px = im_px_at(s, tt, config);
            const double x = s.exit->x + s.sigma * tt * tt;
            const Momentum mom = momentum_at(x, *s.exit, config, s.species);
            // finite limit at the exit: |p_x| ~ sqrt(2a) t
            return px > 0.0 ? 2.0 * tt * mom.pz / px : 0.0;
          },
          t_prev, t, 1e-12 * std::max(1.0, s.t_max));
      acc += panel.value;
      t_prev = t;
    }
    out[idx] = sign * acc;
  }
  return out;
}

}  // namespace

PictureData emit_picture(const TunnelingSolution& solution,
                         const FieldConfig& config, int n_samples) {
  validate(config);
  if (n_samples < 2)
    throw std::invalid_argument("picture needs at least two samples");

  PictureData pic;
  pic.x_exit_minus = solution.electron.x;
  pic.x_exit_plus = solution.positron.x;
  pic.x_creation = solution.creation.x_s;
  const double lo =
      std::min({pic.x_exit_minus, pic.x_exit_plus, pic.x_creation});
  const double hi =
      std::max({pic.x_exit_minus, pic.x_exit_plus, pic.x_creation});

  pic.x.resize(n_samples);
  const double h = (hi - lo) / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) pic.x[i] = lo + h * i;
  pic.x.back() = hi;  // keep the far exit exactly on the grid

  const auto fill_kinematics = [&](const ExitState& exit, Species species,
                                   std::vector<double>& kin,
                                   std::vector<double>& pseudo,
                                   std::vector<double>& measure) {
    kin.resize(n_samples);
    pseudo.resize(n_samples);
    measure.resize(n_samples);
    const double ms = effective_mass(exit.p_y, config);
    for (int i = 0; i < n_samples; ++i) {
      const Momentum mom = momentum_at(pic.x[i], exit, config, species);
      kin[i] = mom.p0;
      pseudo[i] = std::hypot(ms, mom.pz);
      measure[i] = pseudo[i] - kin[i];
    }
  };
  fill_kinematics(solution.electron, Species::electron, pic.electron_kinetic,
                  pic.electron_pseudo, pic.electron_measure);
  fill_kinematics(solution.positron, Species::positron, pic.positron_kinetic,
                  pic.positron_pseudo, pic.positron_measure);

  const Segment el = make_segment(solution.electron, Species::electron,
                                  solution.creation.x_s, solution.extent_minus,
                                  config);
  const Segment po = make_segment(solution.positron, Species::positron,
                                  solution.creation.x_s, solution.extent_plus,
                                  config);
  pic.electron_im_z = im_z_column(el, config, pic.x);
  pic.positron_im_z = im_z_column(po, config, pic.x);
  return pic;
}

}  // namespace pairgate
