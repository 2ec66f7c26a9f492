#include "hillkrein/waves.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hillkrein/elliptic.hpp"

namespace hillkrein::waves {

namespace {

using elliptic::complete_E;
using elliptic::complete_K;
using elliptic::dE_dk;
using elliptic::dK_dk;
using elliptic::jacobi;

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kConstraintTol = 1e-12;
constexpr int kMaxBisect = 200;

void check_modulus(WaveFamily family, double k) {
  if (family == WaveFamily::Dnoidal) {
    if (!(k > 0.0 && k < 1.0)) {
      throw std::domain_error("dnoidal modulus must lie in (0,1)");
    }
  } else {
    if (!(k > kInvSqrt2 && k < 1.0)) {
      throw std::domain_error("cnoidal/snoidal modulus must lie in (1/sqrt(2),1)");
    }
  }
}

double cn_amplitude(const WaveProfile& p) {
  // sqrt(2 omega) k / sqrt(2k^2-1) reduces to 4 sqrt(2) k K / L.
  return std::sqrt(2.0 * p.omega) * p.modulus /
         std::sqrt(2.0 * p.modulus * p.modulus - 1.0) / std::sqrt(p.cscale);
}

}  // namespace

ModelParams ModelParams::derived(double kappa1, double kappa2, double gamma) {
  ModelParams p{kappa1, kappa2, gamma, BMode::Derived, 0.0};
  p.validate();
  return p;
}

ModelParams ModelParams::free_b(double gamma, double b) {
  ModelParams p{gamma, gamma, gamma, BMode::Free, b};
  p.validate();
  return p;
}

ModelParams ModelParams::semi_trivial(double kappa1, double kappa2, double gamma) {
  ModelParams p{kappa1, kappa2, gamma, BMode::SemiTrivial, 0.0};
  p.validate();
  return p;
}

void ModelParams::validate() const {
  if (!(kappa1 > 0.0) || !(kappa2 > 0.0)) {
    throw std::domain_error("ModelParams: kappa1 and kappa2 must be positive");
  }
  if (!(gamma >= 0.0)) {
    throw std::domain_error("ModelParams: gamma must be nonnegative");
  }
  switch (b_mode) {
    case BMode::Derived:
      if (gamma > 0.0) {
        const double num = kappa1 - gamma;
        const double den = kappa2 - gamma;
        if (!(num * den > 0.0)) {
          throw std::domain_error(
              "ModelParams: Derived B requires (kappa1-gamma)/(kappa2-gamma) > 0");
        }
      }
      break;
    case BMode::Free:
      if (std::abs(gamma - kappa1) > kConstraintTol * std::max(1.0, gamma) ||
          std::abs(gamma - kappa2) > kConstraintTol * std::max(1.0, gamma) ||
          gamma <= 0.0) {
        throw std::domain_error("ModelParams: Free B requires gamma = kappa1 = kappa2 > 0");
      }
      break;
    case BMode::SemiTrivial:
      break;
  }
}

double coupling_B(const ModelParams& params) {
  params.validate();
  switch (params.b_mode) {
    case BMode::Free:
      return params.b_free;
    case BMode::SemiTrivial:
      return 0.0;
    case BMode::Derived:
      if (params.gamma == 0.0) return std::sqrt(params.kappa1 / params.kappa2);
      return std::sqrt((params.kappa1 - params.gamma) / (params.kappa2 - params.gamma));
  }
  return 0.0;
}

WaveProfile WaveProfile::from_modulus(WaveFamily family, double length, double modulus,
                                      const ModelParams& params) {
  check_modulus(family, modulus);
  if (!(length > 0.0)) throw std::domain_error("WaveProfile: period must be positive");
  const double b = coupling_B(params);
  const double c = params.kappa1 + params.gamma * b * b;
  if (params.b_mode != BMode::SemiTrivial) {
    const double other = params.kappa2 * b * b + params.gamma;
    if (std::abs(c - other) > kConstraintTol * std::max(1.0, c)) {
      throw std::domain_error("WaveProfile: multiple-wave constraint violated");
    }
  }
  WaveProfile p;
  p.family = family;
  p.length = length;
  p.modulus = modulus;
  p.omega = omega_from_k(family, length, modulus);
  p.cscale = c;
  return p;
}

WaveProfile WaveProfile::from_omega(WaveFamily family, double length, double omega,
                                    const ModelParams& params) {
  return from_modulus(family, length, k_from_omega(family, length, omega), params);
}

WaveProfile WaveProfile::with_unit_scale(WaveFamily family, double length, double modulus) {
  check_modulus(family, modulus);
  WaveProfile p;
  p.family = family;
  p.length = length;
  p.modulus = modulus;
  p.omega = omega_from_k(family, length, modulus);
  p.cscale = 1.0;
  return p;
}

double omega_from_k(WaveFamily family, double length, double modulus) {
  check_modulus(family, modulus);
  const double K = complete_K(modulus);
  if (family == WaveFamily::Dnoidal) {
    return 4.0 * (2.0 - modulus * modulus) * K * K / (length * length);
  }
  return 16.0 * K * K * (2.0 * modulus * modulus - 1.0) / (length * length);
}

double k_from_omega(WaveFamily family, double length, double omega) {
  const double pi = std::numbers::pi;
  double lo, hi;
  if (family == WaveFamily::Dnoidal) {
    const double omega_min = 2.0 * pi * pi / (length * length);
    if (!(omega > omega_min)) {
      throw std::domain_error("k_from_omega: dnoidal requires omega > 2 pi^2 / L^2");
    }
    lo = 0.0;
    hi = 0.5;
  } else {
    if (!(omega > 0.0)) {
      throw std::domain_error("k_from_omega: cnoidal requires omega > 0");
    }
    lo = kInvSqrt2;
    hi = 0.5 * (kInvSqrt2 + 1.0);
  }
  auto f = [&](double k) { return omega_from_k(family, length, k); };
  int expand = 0;
  while (f(hi) < omega) {
    hi = 0.5 * (hi + 1.0);
    if (++expand > 60) {
      throw std::runtime_error("k_from_omega: bracket expansion failed");
    }
  }
  for (int it = 0; it < kMaxBisect; ++it) {
    const double mid = 0.5 * (lo + hi);
    double val;
    if (mid <= lo || mid >= hi) {
      return mid;  // interval collapsed to machine resolution
    }
    val = f(mid);
    if (std::abs(val - omega) <= 1e-12 * omega) return mid;
    (val < omega ? lo : hi) = mid;
  }
  throw std::runtime_error("k_from_omega: bisection iteration limit reached");
}

double eval_wave(const WaveProfile& p, double x) {
  const double K = complete_K(p.modulus);
  switch (p.family) {
    case WaveFamily::Dnoidal: {
      const double amp = 2.0 * std::sqrt(2.0) * K / (p.length * std::sqrt(p.cscale));
      return amp * jacobi(2.0 * K * x / p.length, p.modulus).dn;
    }
    case WaveFamily::Cnoidal: {
      return cn_amplitude(p) * jacobi(4.0 * K * x / p.length, p.modulus).cn;
    }
    case WaveFamily::SnoidalShift: {
      const double amp = cn_amplitude(p) * std::sqrt(1.0 - p.modulus * p.modulus);
      const auto t = jacobi(4.0 * K * x / p.length, p.modulus);
      return amp * t.sn / t.dn;
    }
  }
  return 0.0;
}

double eval_wave_deriv(const WaveProfile& p, double x) {
  const double K = complete_K(p.modulus);
  const double k = p.modulus;
  switch (p.family) {
    case WaveFamily::Dnoidal: {
      const double amp = 2.0 * std::sqrt(2.0) * K / (p.length * std::sqrt(p.cscale));
      const auto t = jacobi(2.0 * K * x / p.length, k);
      return -amp * k * k * t.sn * t.cn * (2.0 * K / p.length);
    }
    case WaveFamily::Cnoidal: {
      const auto t = jacobi(4.0 * K * x / p.length, k);
      return -cn_amplitude(p) * t.sn * t.dn * (4.0 * K / p.length);
    }
    case WaveFamily::SnoidalShift: {
      const double amp = cn_amplitude(p) * std::sqrt(1.0 - k * k);
      const auto t = jacobi(4.0 * K * x / p.length, k);
      return amp * t.cn / (t.dn * t.dn) * (4.0 * K / p.length);
    }
  }
  return 0.0;
}

std::vector<double> wave_samples(const WaveProfile& p, const Grid& grid) {
  std::vector<double> out(grid.size());
  for (int j = 0; j < grid.size(); ++j) out[j] = eval_wave(p, grid.node(j));
  return out;
}

std::vector<double> wave_deriv_samples(const WaveProfile& p, const Grid& grid) {
  std::vector<double> out(grid.size());
  for (int j = 0; j < grid.size(); ++j) out[j] = eval_wave_deriv(p, grid.node(j));
  return out;
}

double ode_residual(const WaveProfile& p, const Grid& grid) {
  if (std::abs(grid.length() - p.length) > 1e-12 * p.length) {
    throw std::invalid_argument("ode_residual: grid period does not match the profile");
  }
  const auto phi = wave_samples(p, grid);
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(phi.data(), grid.size());
  Eigen::VectorXd second = second_derivative_matrix(grid) * v;
  double sup = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    const double r = -second(j) + p.omega * v(j) - p.cscale * v(j) * v(j) * v(j);
    sup = std::max(sup, std::abs(r));
  }
  return sup;
}

double l2_norm_sq(const WaveProfile& p) {
  const double K = complete_K(p.modulus);
  const double E = complete_E(p.modulus);
  if (p.family == WaveFamily::Dnoidal) {
    return 8.0 * E * K / (p.length * p.cscale);
  }
  const double k2 = p.modulus * p.modulus;
  return 32.0 * K * (E - (1.0 - k2) * K) / (p.length * p.cscale);
}

double d_l2_domega(const WaveProfile& p) {
  const double k = p.modulus;
  const double K = complete_K(k);
  const double E = complete_E(k);
  const double Kp = dK_dk(k);
  const double Ep = dE_dk(k);
  const double L = p.length;
  double dnorm_dk, domega_dk;
  if (p.family == WaveFamily::Dnoidal) {
    dnorm_dk = 8.0 / (L * p.cscale) * (Ep * K + E * Kp);
    domega_dk = 4.0 / (L * L) * (-2.0 * k * K * K + (2.0 - k * k) * 2.0 * K * Kp);
  } else {
    const double inner = E - (1.0 - k * k) * K;
    dnorm_dk = 32.0 / (L * p.cscale) * (Kp * inner + K * (Ep + 2.0 * k * K - (1.0 - k * k) * Kp));
    domega_dk = 16.0 / (L * L) * (2.0 * K * Kp * (2.0 * k * k - 1.0) + 4.0 * k * K * K);
  }
  return dnorm_dk / domega_dk;
}

double conserved_E(const ModelParams& params, const Grid& grid, const ComplexPairSamples& w) {
  const int n = grid.size();
  if ((int)w.re_u.size() != n || (int)w.re_v.size() != n || (int)w.im_u.size() != n ||
      (int)w.im_v.size() != n) {
    throw std::invalid_argument("conserved_E: sample sizes must match the grid");
  }
  const Eigen::MatrixXd d1 = first_derivative_matrix(grid);
  auto map = [n](const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), n);
  };
  const Eigen::VectorXd a = map(w.re_u), b = map(w.im_u), c = map(w.re_v), d = map(w.im_v);
  const Eigen::VectorXd ax = d1 * a, bx = d1 * b, cx = d1 * c, dx = d1 * d;
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    const double u2 = a(j) * a(j) + b(j) * b(j);
    const double v2 = c(j) * c(j) + d(j) * d(j);
    const double grad = ax(j) * ax(j) + bx(j) * bx(j) + cx(j) * cx(j) + dx(j) * dx(j);
    // Re(u^2 conj(v)^2) = (Re u conj(v))^2 - (Im u conj(v))^2
    const double re_uv = a(j) * c(j) + b(j) * d(j);
    const double im_uv = b(j) * c(j) - a(j) * d(j);
    total += 0.5 * (grad - 0.5 * params.kappa1 * u2 * u2 - 0.5 * params.kappa2 * v2 * v2) -
             0.5 * params.gamma * (re_uv * re_uv - im_uv * im_uv);
  }
  return grid.quadrature_weight() * total;
}

double conserved_F(const Grid& grid, const ComplexPairSamples& w) {
  const int n = grid.size();
  if ((int)w.re_u.size() != n || (int)w.re_v.size() != n || (int)w.im_u.size() != n ||
      (int)w.im_v.size() != n) {
    throw std::invalid_argument("conserved_F: sample sizes must match the grid");
  }
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    total += w.re_u[j] * w.re_u[j] + w.im_u[j] * w.im_u[j] + w.re_v[j] * w.re_v[j] +
             w.im_v[j] * w.im_v[j];
  }
  return 0.5 * grid.quadrature_weight() * total;
}

}  // namespace hillkrein::waves
