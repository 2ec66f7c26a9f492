#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hillkrein/elliptic.hpp"
#include "hillkrein/waves.hpp"

using namespace hillkrein;
using namespace hillkrein::waves;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double trapezoid_l2(const WaveProfile& p, int n) {
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double v = eval_wave(p, p.length * j / n);
    acc += v * v;
  }
  return acc * p.length / n;
}

}  // namespace

TEST_CASE("coupling_B across modes") {
  CHECK(coupling_B(ModelParams::derived(2, 3, 1)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(coupling_B(ModelParams::derived(2, 3, 0)) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(coupling_B(ModelParams::free_b(1.0, 1.5)) == doctest::Approx(1.5));
  CHECK(coupling_B(ModelParams::semi_trivial(2, 3, 1)) == 0.0);
  // gamma strictly between the kappas makes the radicand negative.
  CHECK_THROWS_AS(ModelParams::derived(2, 3, 2.5), std::domain_error);
  CHECK_THROWS_AS(ModelParams::derived(2, 3, 3), std::domain_error);
  CHECK_THROWS_AS(ModelParams::derived(-1, 3, 0.5), std::domain_error);
  CHECK_THROWS_AS(ModelParams::free_b(0.0, 1.0), std::domain_error);
}

TEST_CASE("omega_from_k: limits and frozen value") {
  // K(0) = pi/2 makes the dnoidal frequency approach 2 pi^2 / L^2.
  CHECK(omega_from_k(WaveFamily::Dnoidal, kTwoPi, 1e-8) ==
        doctest::Approx(0.5).epsilon(1e-10));
  CHECK(omega_from_k(WaveFamily::Cnoidal, kTwoPi, 1.0 / std::sqrt(2.0) + 1e-12) ==
        doctest::Approx(0.0).epsilon(1e-9));
  const double K = elliptic::complete_K(0.8);
  CHECK(omega_from_k(WaveFamily::Dnoidal, kTwoPi, 0.8) ==
        doctest::Approx(4.0 * (2.0 - 0.64) * K * K / (kTwoPi * kTwoPi)).epsilon(1e-14));
  CHECK_THROWS_AS(omega_from_k(WaveFamily::Dnoidal, kTwoPi, 1.0), std::domain_error);
  CHECK_THROWS_AS(omega_from_k(WaveFamily::Cnoidal, kTwoPi, 0.5), std::domain_error);
}

TEST_CASE("omega_from_k is strictly increasing on each family interval") {
  double prev = -1.0;
  for (int i = 1; i <= 200; ++i) {
    const double k = 0.999 * i / 200.0;
    const double w = omega_from_k(WaveFamily::Dnoidal, kTwoPi, k);
    CHECK(w > prev);
    prev = w;
  }
  prev = -1.0;
  for (int i = 1; i <= 200; ++i) {
    const double k = 1.0 / std::sqrt(2.0) + (0.999 - 1.0 / std::sqrt(2.0)) * i / 200.0;
    const double w = omega_from_k(WaveFamily::Cnoidal, kTwoPi, k);
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("k_from_omega inverts omega_from_k") {
  for (auto family : {WaveFamily::Dnoidal, WaveFamily::Cnoidal}) {
    const double w = omega_from_k(family, kTwoPi, 0.8);
    CHECK(k_from_omega(family, kTwoPi, w) == doctest::Approx(0.8).epsilon(1e-10));
  }
  // Boundary frequency is excluded for the dnoidal family.
  CHECK_THROWS_AS(k_from_omega(WaveFamily::Dnoidal, kTwoPi, 0.5), std::domain_error);
  CHECK_THROWS_AS(k_from_omega(WaveFamily::Cnoidal, kTwoPi, -1.0), std::domain_error);
  // Large frequency exercises the bracket expansion toward k -> 1.
  const double k_big = k_from_omega(WaveFamily::Dnoidal, kTwoPi, 500.0);
  CHECK(omega_from_k(WaveFamily::Dnoidal, kTwoPi, k_big) ==
        doctest::Approx(500.0).epsilon(1e-11));
}

TEST_CASE("eval_wave: closed-form anchor points") {
  const auto params = ModelParams::derived(2, 3, 1);
  const auto dn = WaveProfile::from_modulus(WaveFamily::Dnoidal, kTwoPi, 0.8, params);
  const double K = elliptic::complete_K(0.8);
  CHECK(eval_wave(dn, 0.0) ==
        doctest::Approx(2.0 * std::sqrt(2.0) * K / (kTwoPi * std::sqrt(dn.cscale)))
            .epsilon(1e-13));

  const auto cn = WaveProfile::from_modulus(WaveFamily::Cnoidal, kTwoPi, 0.8, params);
  CHECK(std::abs(eval_wave(cn, cn.length / 4.0)) < 1e-12);

  const auto sh =
      WaveProfile::from_modulus(WaveFamily::SnoidalShift, kTwoPi, 0.8, params);
  CHECK(eval_wave(sh, 0.0) == 0.0);
  for (double x : {0.3, 1.1, 2.9}) {
    CHECK(eval_wave(sh, -x) == doctest::Approx(-eval_wave(sh, x)).epsilon(1e-12));
  }
}

TEST_CASE("snoidal shift equals the cnoidal wave shifted by a quarter period") {
  const auto params = ModelParams::derived(2, 3, 5);
  const auto cn = WaveProfile::from_modulus(WaveFamily::Cnoidal, kTwoPi, 0.85, params);
  const auto sh =
      WaveProfile::from_modulus(WaveFamily::SnoidalShift, kTwoPi, 0.85, params);
  const Grid grid(128, kTwoPi);
  const auto cn_s = wave_samples(cn, grid);
  const auto sh_s = wave_samples(sh, grid);
  const int quarter = grid.size() / 4;
  for (int j = 0; j < grid.size(); ++j) {
    CHECK(sh_s[j] ==
          doctest::Approx(cn_s[(j - quarter + grid.size()) % grid.size()]).epsilon(1e-10));
  }
}

TEST_CASE("wave derivative matches finite differences") {
  const auto params = ModelParams::derived(2, 3, 1);
  const double h = 1e-6;
  for (auto family :
       {WaveFamily::Dnoidal, WaveFamily::Cnoidal, WaveFamily::SnoidalShift}) {
    const auto p = WaveProfile::from_modulus(family, kTwoPi, 0.8, params);
    for (double x : {0.13, 0.9, 2.2, 4.4}) {
      const double fd = (eval_wave(p, x + h) - eval_wave(p, x - h)) / (2 * h);
      CHECK(eval_wave_deriv(p, x) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("closed forms satisfy the profile ODE to spectral accuracy") {
  const auto params = ModelParams::derived(2, 3, 1);
  const Grid grid(256, kTwoPi);
  for (auto [family, k] : {std::pair{WaveFamily::Dnoidal, 0.5},
                           std::pair{WaveFamily::Cnoidal, 0.8},
                           std::pair{WaveFamily::SnoidalShift, 0.8}}) {
    const auto p = WaveProfile::from_modulus(family, kTwoPi, k, params);
    CHECK(ode_residual(p, grid) < 1e-8);
  }
}

TEST_CASE("l2_norm_sq: closed form vs quadrature and translation invariance") {
  const auto params = ModelParams::derived(2, 3, 1);
  for (auto [family, k] : {std::pair{WaveFamily::Dnoidal, 0.5},
                           std::pair{WaveFamily::Cnoidal, 0.8},
                           std::pair{WaveFamily::SnoidalShift, 0.8}}) {
    const auto p = WaveProfile::from_modulus(family, kTwoPi, k, params);
    const double closed = l2_norm_sq(p);
    CHECK(closed == doctest::Approx(trapezoid_l2(p, 512)).epsilon(1e-8));
  }
  const auto cn = WaveProfile::from_modulus(WaveFamily::Cnoidal, kTwoPi, 0.8, params);
  const auto sh =
      WaveProfile::from_modulus(WaveFamily::SnoidalShift, kTwoPi, 0.8, params);
  CHECK(l2_norm_sq(cn) == doctest::Approx(l2_norm_sq(sh)).epsilon(1e-15));

  const auto dn_unit = WaveProfile::with_unit_scale(WaveFamily::Dnoidal, kTwoPi, 0.5);
  CHECK(l2_norm_sq(dn_unit) ==
        doctest::Approx(8.0 / kTwoPi * elliptic::complete_E(0.5) *
                        elliptic::complete_K(0.5))
            .epsilon(1e-14));
}

TEST_CASE("d_l2_domega positive and consistent with finite differences") {
  const auto params = ModelParams::derived(2, 3, 1);
  for (auto family : {WaveFamily::Dnoidal, WaveFamily::Cnoidal}) {
    const double k_lo = family == WaveFamily::Dnoidal ? 0.1 : 0.72;
    const double k_hi = 0.97;
    for (int i = 0; i <= 19; ++i) {
      const double k = k_lo + (k_hi - k_lo) * i / 19.0;
      const auto p = WaveProfile::from_modulus(family, kTwoPi, k, params);
      CHECK(d_l2_domega(p) > 0.0);
    }
    const auto p = WaveProfile::from_modulus(family, kTwoPi, 0.8, params);
    const double dw = 1e-5 * p.omega;
    const auto plus = WaveProfile::from_omega(family, kTwoPi, p.omega + dw, params);
    const auto minus = WaveProfile::from_omega(family, kTwoPi, p.omega - dw, params);
    const double fd = (l2_norm_sq(plus) - l2_norm_sq(minus)) / (2 * dw);
    CHECK(d_l2_domega(p) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("conserved functionals") {
  const auto params = ModelParams::derived(2, 3, 1);
  const Grid grid(128, kTwoPi);
  const auto p = WaveProfile::from_modulus(WaveFamily::Dnoidal, kTwoPi, 0.8, params);
  const double b = coupling_B(params);

  ComplexPairSamples w;
  w.re_u = wave_samples(p, grid);
  w.re_v.resize(grid.size());
  for (int j = 0; j < grid.size(); ++j) w.re_v[j] = b * w.re_u[j];
  w.im_u.assign(grid.size(), 0.0);
  w.im_v.assign(grid.size(), 0.0);

  CHECK(conserved_F(grid, w) ==
        doctest::Approx(0.5 * (1.0 + b * b) * l2_norm_sq(p)).epsilon(1e-8));

  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexPairSamples noise;
  for (auto* field : {&noise.re_u, &noise.re_v, &noise.im_u, &noise.im_v}) {
    field->resize(grid.size());
    for (auto& x : *field) x = u(rng);
  }
  CHECK(conserved_F(grid, noise) >= 0.0);

  ComplexPairSamples zero;
  for (auto* field : {&zero.re_u, &zero.re_v, &zero.im_u, &zero.im_v}) {
    field->assign(grid.size(), 0.0);
  }
  CHECK(conserved_E(params, grid, zero) == 0.0);
  CHECK(conserved_F(grid, zero) == 0.0);
}
