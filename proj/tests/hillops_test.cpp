#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hillkrein/elliptic.hpp"
#include "hillkrein/hillops.hpp"

using namespace hillkrein;
using namespace hillkrein::hillops;
using waves::ModelParams;
using waves::WaveFamily;
using waves::WaveProfile;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

DiscreteOperator free_op(double omega, const Grid& grid, Parity parity) {
  std::vector<double> zero(grid.size(), 0.0);
  return assemble_hill(0.0, zero, omega, grid, parity);
}

double cosangle(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

Eigen::VectorXd sample(const std::function<double(double)>& f, const Grid& grid) {
  Eigen::VectorXd v(grid.size());
  for (int j = 0; j < grid.size(); ++j) v(j) = f(grid.node(j));
  return v;
}

// Second route for the inverse quadratic form: shift the kernel away and use a
// dense LU solve, then project the kernel out of the solution.
double inv_qf_deflated(const DiscreteOperator& op, const Eigen::VectorXd& b) {
  const auto s = spectral_summary(op);
  const Eigen::MatrixXd& ker = s.kernel_vectors;
  const double shift = std::max(1.0, std::abs(op.omega));
  Eigen::MatrixXd shifted = op.matrix;
  if (ker.cols() > 0) shifted += shift * ker * ker.transpose();
  Eigen::VectorXd x = shifted.partialPivLu().solve(b);
  if (ker.cols() > 0) x -= ker * (ker.transpose() * x);
  return op.grid.quadrature_weight() * x.dot(b);
}

}  // namespace

TEST_CASE("free operator eigenvalues are omega + (2 pi n / L)^2") {
  const Grid grid(64, kTwoPi);
  const double omega = 0.7;
  const auto s_full = spectral_summary(free_op(omega, grid, Parity::Full));
  // Modes n = 0, +-1, +-2, ...: nonzero n doubled.
  std::vector<double> expect{omega};
  for (int n = 1; n <= 5; ++n) {
    expect.push_back(omega + n * n);
    expect.push_back(omega + n * n);
  }
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(s_full.eigenvalues[i] == doctest::Approx(expect[i]).epsilon(1e-10));
  }
  CHECK(s_full.n_neg == 0);
  CHECK(s_full.z_ker == 0);

  const auto s_odd = spectral_summary(free_op(omega, grid, Parity::Odd));
  for (int n = 1; n <= 6; ++n) {
    CHECK(s_odd.eigenvalues[n - 1] == doctest::Approx(omega + n * n).epsilon(1e-10));
  }
}

TEST_CASE("dnoidal blocks: counts and kernels") {
  const auto params = ModelParams::derived(2, 3, 1);
  const Grid grid(128, kTwoPi);
  const auto p = WaveProfile::from_modulus(WaveFamily::Dnoidal, kTwoPi, 0.8, params);

  // L1 = -d^2 + omega - 3 cscale phi^2, kernel along phi'.
  const auto l1 = assemble_hill(3.0 * p.cscale, p, grid, Parity::Full);
  const auto s1 = spectral_summary(l1);
  CHECK(s1.n_neg == 1);
  CHECK(s1.z_ker == 1);
  const auto dphi = waves::wave_deriv_samples(p, grid);
  CHECK(cosangle(s1.kernel_vectors.col(0),
                 Eigen::Map<const Eigen::VectorXd>(dphi.data(), grid.size())) ==
        doctest::Approx(1.0).epsilon(1e-8));

  // L2 = -d^2 + omega - cscale phi^2, kernel along phi.
  const auto l2 = assemble_hill(p.cscale, p, grid, Parity::Full);
  const auto s2 = spectral_summary(l2);
  CHECK(s2.n_neg == 0);
  CHECK(s2.z_ker == 1);
  const auto phi = waves::wave_samples(p, grid);
  CHECK(cosangle(s2.kernel_vectors.col(0),
                 Eigen::Map<const Eigen::VectorXd>(phi.data(), grid.size())) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("cnoidal blocks: counts, analytic eigenpairs, odd restriction") {
  const Grid grid(128, kTwoPi);
  const double k = 0.8;
  const auto p = WaveProfile::with_unit_scale(WaveFamily::Cnoidal, kTwoPi, k);
  const auto l1 = assemble_hill(3.0, p, grid, Parity::Full);
  const auto l2 = assemble_hill(1.0, p, grid, Parity::Full);
  const auto s1 = spectral_summary(l1);
  const auto s2 = spectral_summary(l2);
  CHECK(s1.n_neg == 2);
  CHECK(s1.z_ker == 1);
  CHECK(s2.n_neg == 1);
  CHECK(s2.z_ker == 1);

  const auto pairs1 = analytic_cnoidal_eigs(CnoidalBlock::L1, k, kTwoPi);
  REQUIRE(pairs1.size() == 3);
  CHECK(pairs1[2].eigenvalue == 0.0);
  const double base = 16.0 * std::pow(elliptic::complete_K(k), 2) / (kTwoPi * kTwoPi);
  CHECK(pairs1[1].eigenvalue == doctest::Approx(-3.0 * k * k * base).epsilon(1e-14));
  // Frozen: -3 * 0.64 * 16 K(0.8)^2 / (2 pi)^2.
  CHECK(pairs1[1].eigenvalue == doctest::Approx(-3.097983418385).epsilon(1e-10));
  for (size_t i = 0; i < pairs1.size(); ++i) {
    CHECK(s1.eigenvalues[i] == doctest::Approx(pairs1[i].eigenvalue).epsilon(1e-9));
    // The sampled eigenfunction is annihilated by (L1 - lambda).
    const Eigen::VectorXd f = sample(pairs1[i].eigenfunction, grid);
    const Eigen::VectorXd r = l1.matrix * f - pairs1[i].eigenvalue * f;
    CHECK(r.norm() / f.norm() < 1e-8);
  }

  const auto pairs2 = analytic_cnoidal_eigs(CnoidalBlock::L2, k, kTwoPi);
  REQUIRE(pairs2.size() == 2);
  CHECK(pairs2[0].eigenvalue < 0.0);
  CHECK(pairs2[0].eigenvalue ==
        doctest::Approx(base * (k * k - 1.0)).epsilon(1e-14));
  for (size_t i = 0; i < pairs2.size(); ++i) {
    CHECK(s2.eigenvalues[i] == doctest::Approx(pairs2[i].eigenvalue).epsilon(1e-9));
  }
  CHECK_THROWS_AS(analytic_cnoidal_eigs(CnoidalBlock::L1, 0.5, kTwoPi),
                  std::domain_error);

  // Odd restriction about x = 0 needs the shifted (odd) profile's potential,
  // which equals the cnoidal one translated; assemble from the shifted wave.
  const auto psi = WaveProfile::with_unit_scale(WaveFamily::SnoidalShift, kTwoPi, k);
  const auto l1o = assemble_hill(3.0, psi, grid, Parity::Odd);
  const auto l2o = assemble_hill(1.0, psi, grid, Parity::Odd);
  const auto s1o = spectral_summary(l1o);
  const auto s2o = spectral_summary(l2o);
  CHECK(s1o.n_neg == 1);
  CHECK(s1o.z_ker == 0);
  CHECK(s2o.n_neg == 0);
  CHECK(s2o.z_ker == 1);
  const Eigen::VectorXd psi_coef = restrict_to_parity(
      grid, Parity::Odd,
      Eigen::Map<const Eigen::VectorXd>(waves::wave_samples(psi, grid).data(),
                                        grid.size()));
  CHECK(cosangle(s2o.kernel_vectors.col(0), psi_coef) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("odd and even restrictions partition the full spectrum") {
  const Grid grid(96, kTwoPi);
  const auto psi = WaveProfile::with_unit_scale(WaveFamily::SnoidalShift, kTwoPi, 0.9);
  const auto full = spectral_summary(assemble_hill(2.0, psi, grid, Parity::Full));
  const auto odd = spectral_summary(assemble_hill(2.0, psi, grid, Parity::Odd));
  const auto even = spectral_summary(assemble_hill(2.0, psi, grid, Parity::Even));
  std::vector<double> merged = odd.eigenvalues;
  merged.insert(merged.end(), even.eigenvalues.begin(), even.eigenvalues.end());
  std::sort(merged.begin(), merged.end());
  REQUIRE(merged.size() == full.eigenvalues.size());
  for (size_t i = 0; i < merged.size(); ++i) {
    CHECK(merged[i] == doctest::Approx(full.eigenvalues[i]).epsilon(1e-8));
  }
}

TEST_CASE("parity restriction rejects an uneven potential") {
  const Grid grid(64, kTwoPi);
  std::vector<double> shifted(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    shifted[j] = std::cos(grid.node(j) - 0.3);  // even about 0.3, not about 0
  }
  CHECK_THROWS_AS(assemble_hill(1.0, shifted, 1.0, grid, Parity::Odd),
                  std::invalid_argument);
}

TEST_CASE("solve_on_range: basics and the dense-solve oracle") {
  const Grid grid(64, kTwoPi);
  const auto op = free_op(1.3, grid, Parity::Full);  // positive definite

  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(grid.size());
  CHECK(solve_on_range(op, zero).norm() == 0.0);

  Eigen::VectorXd rhs(grid.size());
  for (int j = 0; j < grid.size(); ++j) rhs(j) = std::sin(3.0 * grid.node(j)) + 0.2;
  const Eigen::VectorXd x = solve_on_range(op, rhs);
  const Eigen::VectorXd direct = op.matrix.partialPivLu().solve(rhs);
  CHECK((x - direct).norm() / direct.norm() < 1e-10);
  CHECK((op.matrix * x - rhs).norm() <= 1e-8 * rhs.norm());

  // A kernel vector is not in the range of a symmetric operator.
  const auto params = ModelParams::derived(2, 3, 1);
  const auto p = WaveProfile::from_modulus(WaveFamily::Dnoidal, kTwoPi, 0.8, params);
  const auto l2 = assemble_hill(p.cscale, p, grid, Parity::Full);
  const auto s2 = spectral_summary(l2);
  REQUIRE(s2.z_ker == 1);
  CHECK_THROWS_AS(solve_on_range(l2, s2.kernel_vectors.col(0)), NotInRangeError);
}

TEST_CASE("inv_quadratic_form: signs, zero input, route agreement") {
  const Grid grid(96, kTwoPi);
  const auto params = ModelParams::derived(2, 3, 1);
  const auto p = WaveProfile::from_modulus(WaveFamily::Dnoidal, kTwoPi, 0.8, params);
  const auto phi = waves::wave_samples(p, grid);
  const auto dphi = waves::wave_deriv_samples(p, grid);
  const Eigen::VectorXd phi_v = Eigen::Map<const Eigen::VectorXd>(phi.data(), grid.size());
  const Eigen::VectorXd dphi_v =
      Eigen::Map<const Eigen::VectorXd>(dphi.data(), grid.size());

  // L2 is nonnegative with kernel [phi]; phi' is orthogonal to it.
  const auto l2 = assemble_hill(p.cscale, p, grid, Parity::Full);
  const double q2 = inv_quadratic_form(l2, dphi_v);
  CHECK(q2 > 0.0);
  CHECK(q2 == doctest::Approx(inv_qf_deflated(l2, dphi_v)).epsilon(1e-9));

  const auto l1 = assemble_hill(3.0 * p.cscale, p, grid, Parity::Full);
  CHECK(inv_quadratic_form(l1, Eigen::VectorXd::Zero(grid.size())) == 0.0);
  const double q1 = inv_quadratic_form(l1, phi_v);
  CHECK(q1 < 0.0);
  CHECK(q1 == doctest::Approx(inv_qf_deflated(l1, phi_v)).epsilon(1e-9));
}

TEST_CASE("(L1^{-1} phi, phi) = -1/2 d/domega ||phi||^2 across both families") {
  const Grid grid(160, kTwoPi);
  const auto params = ModelParams::derived(2, 3, 1);
  for (auto family : {WaveFamily::Dnoidal, WaveFamily::Cnoidal}) {
    const double k_lo = family == WaveFamily::Dnoidal ? 0.3 : 0.73;
    for (int i = 0; i <= 4; ++i) {
      const double k = k_lo + (0.93 - k_lo) * i / 4.0;
      const auto p = WaveProfile::from_modulus(family, kTwoPi, k, params);
      const auto l1 = assemble_hill(3.0 * p.cscale, p, grid, Parity::Full);
      const auto phi = waves::wave_samples(p, grid);
      const double q = inv_quadratic_form(
          l1, Eigen::Map<const Eigen::VectorXd>(phi.data(), grid.size()));
      CHECK(std::abs(q + 0.5 * waves::d_l2_domega(p)) < 1e-5 * std::abs(q));
    }
  }
}
