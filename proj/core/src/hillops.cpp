#include "hillkrein/hillops.hpp"

#include <cmath>
#include <string>

#include "hillkrein/elliptic.hpp"

namespace hillkrein::hillops {

namespace {

double zero_threshold(const DiscreteOperator& op, double zero_tol) {
  return zero_tol * std::max(1.0, std::abs(op.omega));
}

void check_even_potential(const std::vector<double>& q) {
  const int n = (int)q.size();
  double scale = 0.0;
  for (double v : q) scale = std::max(scale, std::abs(v));
  for (int j = 1; j < n; ++j) {
    if (std::abs(q[j] - q[n - j]) > 1e-10 * std::max(1.0, scale)) {
      throw std::invalid_argument(
          "assemble_hill: potential is not even about x = 0; parity restriction invalid");
    }
  }
}

}  // namespace

DiscreteOperator assemble_hill(double beta, const waves::WaveProfile& profile,
                               const Grid& grid, Parity parity) {
  return assemble_hill(beta, waves::wave_samples(profile, grid), profile.omega, grid,
                       parity);
}

DiscreteOperator assemble_hill(double beta, const std::vector<double>& phi_samples,
                               double omega, const Grid& grid, Parity parity) {
  const int n = grid.size();
  if ((int)phi_samples.size() != n) {
    throw std::invalid_argument("assemble_hill: sample count must match the grid");
  }
  std::vector<double> q(n);
  for (int j = 0; j < n; ++j) q[j] = beta * phi_samples[j] * phi_samples[j];

  Eigen::MatrixXd full = -second_derivative_matrix(grid);
  for (int j = 0; j < n; ++j) full(j, j) += omega - q[j];

  DiscreteOperator op{Eigen::MatrixXd(), parity, beta, omega, grid};
  if (parity == Parity::Full) {
    op.matrix = 0.5 * (full + full.transpose());
    return op;
  }
  check_even_potential(q);
  const Eigen::MatrixXd basis =
      (parity == Parity::Odd) ? sine_basis(grid) : cosine_basis(grid);
  Eigen::MatrixXd restricted = basis.transpose() * full * basis;
  op.matrix = 0.5 * (restricted + restricted.transpose());
  return op;
}

SpectralSummary spectral_summary(const DiscreteOperator& op, double zero_tol) {
  if (!(zero_tol > 0.0)) {
    throw std::invalid_argument("spectral_summary: zero_tol must be positive");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("spectral_summary: eigendecomposition failed");
  }
  const double tol = zero_threshold(op, zero_tol);
  SpectralSummary s;
  const auto& lam = es.eigenvalues();
  s.eigenvalues.assign(lam.data(), lam.data() + lam.size());
  std::vector<int> kernel_cols;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam(i) < -tol) {
      ++s.n_neg;
    } else if (std::abs(lam(i)) <= tol) {
      ++s.z_ker;
      kernel_cols.push_back(i);
    }
  }
  s.kernel_vectors.resize(op.matrix.rows(), (int)kernel_cols.size());
  for (int c = 0; c < (int)kernel_cols.size(); ++c) {
    s.kernel_vectors.col(c) = es.eigenvectors().col(kernel_cols[c]);
  }
  return s;
}

std::vector<AnalyticEigenpair> analytic_cnoidal_eigs(CnoidalBlock block, double modulus,
                                                     double length) {
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  if (!(modulus > inv_sqrt2 && modulus < 1.0)) {
    throw std::domain_error("analytic_cnoidal_eigs: modulus must lie in (1/sqrt(2),1)");
  }
  const double k = modulus;
  const double K = elliptic::complete_K(k);
  const double rate = 4.0 * K / length;
  const double base = 16.0 * K * K / (length * length);
  const double a = std::sqrt(1.0 - k * k + k * k * k * k);

  std::vector<AnalyticEigenpair> out;
  if (block == CnoidalBlock::L1) {
    out.push_back({(1.0 - 2.0 * k * k - 2.0 * a) * base, [=](double x) {
                     const auto t = elliptic::jacobi(rate * x, k);
                     return k * k * t.sn * t.sn - (1.0 + k * k + a) / 3.0;
                   }});
    out.push_back({-3.0 * k * k * base, [=](double x) {
                     const auto t = elliptic::jacobi(rate * x, k);
                     return t.cn * t.dn;
                   }});
    out.push_back({0.0, [=](double x) {
                     const auto t = elliptic::jacobi(rate * x, k);
                     return -rate * t.sn * t.dn;  // d/dx cn(rate x, k)
                   }});
  } else {
    out.push_back({base * (k * k - 1.0), [=](double x) {
                     return elliptic::jacobi(rate * x, k).dn;
                   }});
    out.push_back({0.0, [=](double x) {
                     return elliptic::jacobi(rate * x, k).cn;
                   }});
  }
  return out;
}

Eigen::VectorXd solve_on_range(const DiscreteOperator& op, const Eigen::VectorXd& rhs,
                               double zero_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("solve_on_range: eigendecomposition failed");
  }
  const double tol = zero_threshold(op, zero_tol);
  const double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) return Eigen::VectorXd::Zero(rhs.size());

  const Eigen::VectorXd coef = es.eigenvectors().transpose() * rhs;
  for (int i = 0; i < coef.size(); ++i) {
    if (std::abs(es.eigenvalues()(i)) <= tol &&
        std::abs(coef(i)) > 1e-8 * rhs_norm) {
      throw NotInRangeError(
          "solve_on_range: right-hand side has a kernel component (|<rhs,ker>| = " +
          std::to_string(std::abs(coef(i))) + ")");
    }
  }
  Eigen::VectorXd scaled = Eigen::VectorXd::Zero(coef.size());
  for (int i = 0; i < coef.size(); ++i) {
    if (std::abs(es.eigenvalues()(i)) > tol) {
      scaled(i) = coef(i) / es.eigenvalues()(i);
    }
  }
  return es.eigenvectors() * scaled;
}

double inv_quadratic_form(const DiscreteOperator& op, const Eigen::VectorXd& b,
                          double zero_tol) {
  if (b.norm() == 0.0) return 0.0;
  const Eigen::VectorXd x = solve_on_range(op, b, zero_tol);
  return op.grid.quadrature_weight() * x.dot(b);
}

Eigen::VectorXd restrict_to_parity(const Grid& grid, Parity parity,
                                   const Eigen::VectorXd& grid_samples) {
  if (grid_samples.size() != grid.size()) {
    throw std::invalid_argument("restrict_to_parity: sample count must match the grid");
  }
  if (parity == Parity::Full) return grid_samples;
  const Eigen::MatrixXd basis =
      (parity == Parity::Odd) ? sine_basis(grid) : cosine_basis(grid);
  Eigen::VectorXd coef = basis.transpose() * grid_samples;
  const double lost = (grid_samples - basis * coef).norm();
  if (lost > 1e-8 * std::max(1e-300, grid_samples.norm())) {
    throw std::invalid_argument(
        "restrict_to_parity: samples do not lie in the requested parity subspace");
  }
  return coef;
}

}  // namespace hillkrein::hillops
