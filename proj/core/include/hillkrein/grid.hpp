#pragma once

#include <Eigen/Dense>
#include <vector>

namespace hillkrein {

enum class Parity { Full, Odd, Even };

// Uniform periodic grid x_j = j L / n, j = 0 .. n-1.
class Grid {
 public:
  Grid(int n, double length);

  int size() const { return n_; }
  double length() const { return length_; }
  double spacing() const { return length_ / n_; }
  double node(int j) const { return length_ * j / n_; }
  std::vector<double> nodes() const;

  // Trapezoid weight L/n; (f,g) ~= weight * sum_j f_j g_j approximates the
  // L^2 inner product over one period.
  double quadrature_weight() const { return length_ / n_; }

 private:
  int n_;
  double length_;
};

// Dimension of the parity-restricted space: n (Full), n/2-1 (Odd), n/2+1 (Even).
int restricted_dim(const Grid& grid, Parity parity);

// Orthonormal trigonometric bases as matrix columns (Euclidean-orthonormal on
// the grid). sine_basis: sin(2 pi m x / L), m = 1 .. n/2-1.
// cosine_basis: normalized 1, cos(2 pi m x / L) for m = 1 .. n/2-1, and the
// Nyquist column (-1)^j.
Eigen::MatrixXd sine_basis(const Grid& grid);
Eigen::MatrixXd cosine_basis(const Grid& grid);

// Dense spectral differentiation matrices for L-periodic functions sampled on
// the grid, assembled from the exact trigonometric diagonalization.
Eigen::MatrixXd first_derivative_matrix(const Grid& grid);
Eigen::MatrixXd second_derivative_matrix(const Grid& grid);

}  // namespace hillkrein
