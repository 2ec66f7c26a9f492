#include "hillkrein/etaprobe.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace hillkrein::etaprobe {

namespace {

namespace odeint = boost::numeric::odeint;

using State = std::array<double, 3>;  // (u, u', running quadrature of phi' u)

struct HillSystem {
  const waves::WaveProfile* profile;
  double forcing_sign;  // 0 for the homogeneous run, 1 for the phi'-forced run

  void operator()(const State& s, State& dsdx, double x) const {
    const double phi = waves::eval_wave(*profile, x);
    const double dphi = waves::eval_wave_deriv(*profile, x);
    dsdx[0] = s[1];
    dsdx[1] = (profile->omega - phi * phi) * s[0] - forcing_sign * dphi;
    dsdx[2] = dphi * s[0];
  }
};

IvpSolution integrate(const waves::WaveProfile& profile, const State& start,
                      double forcing_sign, const IvpOptions& opts) {
  if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0) || opts.output_nodes < 2) {
    throw std::invalid_argument("etaprobe: invalid integrator options");
  }
  const double x_end = (opts.x_end == 0.0) ? profile.length : opts.x_end;
  const double direction = (x_end > 0.0) ? 1.0 : -1.0;

  HillSystem sys{&profile, forcing_sign};
  auto stepper = odeint::make_dense_output(opts.abs_tol, opts.rel_tol,
                                           odeint::runge_kutta_dopri5<State>());
  stepper.initialize(start, 0.0, direction * std::abs(x_end) / 64.0);

  IvpSolution out;
  out.nodes.resize(opts.output_nodes);
  out.y.resize(opts.output_nodes);
  out.yprime.resize(opts.output_nodes);
  const double h = x_end / (opts.output_nodes - 1);
  for (int j = 0; j < opts.output_nodes; ++j) out.nodes[j] = j * h;

  int next = 0;
  State interp;
  while (direction * stepper.current_time() < direction * x_end) {
    stepper.do_step(sys);
    while (next < opts.output_nodes &&
           direction * out.nodes[next] <= direction * stepper.current_time()) {
      stepper.calc_state(out.nodes[next], interp);
      out.y[next] = interp[0];
      out.yprime[next] = interp[1];
      ++next;
    }
  }
  while (next < opts.output_nodes) {  // nodes beyond the last accepted step
    stepper.calc_state(out.nodes[next], interp);
    out.y[next] = interp[0];
    out.yprime[next] = interp[1];
    ++next;
  }
  stepper.calc_state(x_end, interp);
  out.end_value = interp[0];
  out.end_slope = interp[1];
  out.quad = interp[2];
  return out;
}

void require_unit_cnoidal(const waves::WaveProfile& profile) {
  if (profile.family != waves::WaveFamily::Cnoidal) {
    throw std::invalid_argument("etaprobe: profile must be the cnoidal wave");
  }
  if (std::abs(profile.cscale - 1.0) > 1e-12) {
    throw std::invalid_argument("etaprobe: profile must have unit amplitude scale");
  }
}

}  // namespace

IvpSolution solve_y(const waves::WaveProfile& unit_cnoidal, const IvpOptions& opts) {
  require_unit_cnoidal(unit_cnoidal);
  const double phi0 = waves::eval_wave(unit_cnoidal, 0.0);
  IvpSolution sol = integrate(unit_cnoidal, {0.0, 1.0 / phi0, 0.0}, 0.0, opts);
  double max_abs = 0.0;
  for (double v : sol.y) max_abs = std::max(max_abs, std::abs(v));
  if (std::abs(sol.end_value) <= 1e-8 * max_abs) {
    throw std::runtime_error("solve_y: y(L) vanishes; fundamental solution is periodic");
  }
  return sol;
}

IvpSolution solve_chi(const waves::WaveProfile& unit_cnoidal, const IvpSolution& y,
                      const IvpOptions& opts) {
  require_unit_cnoidal(unit_cnoidal);
  const double slope0 = -y.quad / y.end_value;
  return integrate(unit_cnoidal, {0.0, slope0, 0.0}, 1.0, opts);
}

EtaSample eta(double modulus, double length, const IvpOptions& opts) {
  const auto profile =
      waves::WaveProfile::with_unit_scale(waves::WaveFamily::Cnoidal, length, modulus);
  const IvpSolution y = solve_y(profile, opts);
  const IvpSolution chi = solve_chi(profile, y, opts);
  EtaSample s;
  s.modulus = modulus;
  s.chi_phi_inner = chi.quad;
  s.eta = length * chi.quad;
  return s;
}

std::vector<EtaSample> eta_curve(double k_min, double k_max, int n_points, double length,
                                 const IvpOptions& opts) {
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  if (!(k_min > inv_sqrt2 && k_min < k_max && k_max < 1.0)) {
    throw std::domain_error("eta_curve: need 1/sqrt(2) < k_min < k_max < 1");
  }
  if (n_points < 2) {
    throw std::domain_error("eta_curve: need at least two samples");
  }
  std::vector<EtaSample> out(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double k = k_min + (k_max - k_min) * i / (n_points - 1);
    try {
      out[i] = eta(k, length, opts);
    } catch (const std::exception& e) {
      out[i].modulus = k;
      out[i].ok = false;
      out[i].error = e.what();
    }
  }
  return out;
}

}  // namespace hillkrein::etaprobe
