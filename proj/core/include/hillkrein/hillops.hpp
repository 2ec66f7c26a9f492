#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hillkrein/grid.hpp"
#include "hillkrein/waves.hpp"

namespace hillkrein::hillops {

// Eigenvalues with |lambda| <= zero_tol * max(1,|omega|) count as kernel.
inline constexpr double kDefaultZeroTol = 1e-6;

// Symmetric discretization of the Hill operator -d^2/dx^2 + omega - beta phi^2
// on the periodic grid, or its restriction to a parity subspace (Galerkin in
// the orthonormal sine/cosine basis).
struct DiscreteOperator {
  Eigen::MatrixXd matrix;
  Parity parity = Parity::Full;
  double beta = 0.0;
  double omega = 0.0;
  Grid grid;
};

// Parity restriction requires the potential phi^2 to be even about x = 0;
// throws std::invalid_argument when the sampled potential is not.
DiscreteOperator assemble_hill(double beta, const waves::WaveProfile& profile,
                               const Grid& grid, Parity parity);
DiscreteOperator assemble_hill(double beta, const std::vector<double>& phi_samples,
                               double omega, const Grid& grid, Parity parity);

struct SpectralSummary {
  std::vector<double> eigenvalues;  // ascending
  int n_neg = 0;
  int z_ker = 0;
  Eigen::MatrixXd kernel_vectors;   // orthonormal columns spanning the numerical kernel
};

SpectralSummary spectral_summary(const DiscreteOperator& op,
                                 double zero_tol = kDefaultZeroTol);

// First band edges of the cnoidal Hill blocks with unit amplitude scale:
// L1 = -d^2 + omega - 3 phi^2 (three pairs, the last with eigenvalue 0) and
// L2 = -d^2 + omega - phi^2 (two pairs, dn and cn profiles).
enum class CnoidalBlock { L1, L2 };

struct AnalyticEigenpair {
  double eigenvalue;
  std::function<double(double)> eigenfunction;
};

std::vector<AnalyticEigenpair> analytic_cnoidal_eigs(CnoidalBlock block, double modulus,
                                                     double length);

// Thrown when a right-hand side has a component along the kernel.
class NotInRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares solve restricted to the range: expands rhs in the eigenbasis,
// zeroes the kernel modes, divides by the nonzero eigenvalues. Requires
// |<rhs, kernel>| <= 1e-8 ||rhs|| per kernel vector.
Eigen::VectorXd solve_on_range(const DiscreteOperator& op, const Eigen::VectorXd& rhs,
                               double zero_tol = kDefaultZeroTol);

// (op^{-1} b, b) under the trapezoid inner product (weight L/n).
double inv_quadratic_form(const DiscreteOperator& op, const Eigen::VectorXd& b,
                          double zero_tol = kDefaultZeroTol);

// Coefficients of grid samples in the operator's parity basis (pass-through for
// Full). Throws std::invalid_argument when the samples do not lie in the
// subspace to 1e-8 relative.
Eigen::VectorXd restrict_to_parity(const Grid& grid, Parity parity,
                                   const Eigen::VectorXd& grid_samples);

}  // namespace hillkrein::hillops
