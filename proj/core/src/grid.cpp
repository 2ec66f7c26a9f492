#include "hillkrein/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hillkrein {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Grid::Grid(int n, double length) : n_(n), length_(length) {
  if (n < 64 || n % 4 != 0) {
    throw std::invalid_argument("Grid: node count must be >= 64 and a multiple of 4");
  }
  if (!(length > 0.0)) {
    throw std::invalid_argument("Grid: period must be positive");
  }
}

std::vector<double> Grid::nodes() const {
  std::vector<double> x(n_);
  for (int j = 0; j < n_; ++j) x[j] = node(j);
  return x;
}

int restricted_dim(const Grid& grid, Parity parity) {
  switch (parity) {
    case Parity::Full: return grid.size();
    case Parity::Odd: return grid.size() / 2 - 1;
    case Parity::Even: return grid.size() / 2 + 1;
  }
  return grid.size();
}

Eigen::MatrixXd sine_basis(const Grid& grid) {
  const int n = grid.size();
  const int m = n / 2 - 1;
  Eigen::MatrixXd s(n, m);
  const double scale = std::sqrt(2.0 / n);
  for (int c = 0; c < m; ++c) {
    const int freq = c + 1;
    for (int j = 0; j < n; ++j) {
      s(j, c) = scale * std::sin(kTwoPi * freq * j / n);
    }
  }
  return s;
}

Eigen::MatrixXd cosine_basis(const Grid& grid) {
  const int n = grid.size();
  const int m = n / 2 + 1;
  Eigen::MatrixXd c(n, m);
  const double scale = std::sqrt(2.0 / n);
  const double flat = 1.0 / std::sqrt(double(n));
  for (int j = 0; j < n; ++j) c(j, 0) = flat;
  for (int col = 1; col < m - 1; ++col) {
    for (int j = 0; j < n; ++j) {
      c(j, col) = scale * std::cos(kTwoPi * col * j / n);
    }
  }
  for (int j = 0; j < n; ++j) c(j, m - 1) = (j % 2 == 0 ? flat : -flat);
  return c;
}

Eigen::MatrixXd first_derivative_matrix(const Grid& grid) {
  const int n = grid.size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd cb = cosine_basis(grid);
  const Eigen::MatrixXd sb = sine_basis(grid);
  // d/dx cos(kx) = -k sin(kx), d/dx sin(kx) = k cos(kx); the constant and
  // Nyquist columns differentiate to zero in this convention.
  for (int m = 1; m <= n / 2 - 1; ++m) {
    const double kn = kTwoPi * m / grid.length();
    d += kn * (cb.col(m) * sb.col(m - 1).transpose() -
               sb.col(m - 1) * cb.col(m).transpose());
  }
  return d;
}

Eigen::MatrixXd second_derivative_matrix(const Grid& grid) {
  const int n = grid.size();
  const Eigen::MatrixXd cb = cosine_basis(grid);
  const Eigen::MatrixXd sb = sine_basis(grid);
  Eigen::VectorXd csq(n / 2 + 1), ssq(n / 2 - 1);
  for (int m = 0; m <= n / 2; ++m) {
    const double kn = kTwoPi * m / grid.length();
    csq(m) = -kn * kn;
  }
  for (int m = 1; m <= n / 2 - 1; ++m) {
    const double kn = kTwoPi * m / grid.length();
    ssq(m - 1) = -kn * kn;
  }
  Eigen::MatrixXd d2 = cb * csq.asDiagonal() * cb.transpose() +
                       sb * ssq.asDiagonal() * sb.transpose();
  return 0.5 * (d2 + d2.transpose());
}

}  // namespace hillkrein
