#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hillkrein/hillops.hpp"

namespace hillkrein::stability {

enum class Scenario { Multiple, SemiTrivial };

// Coupling regimes. Multiple waves: I gamma in (0,min{k1,k2}), II gamma >
// max{k1,k2}, III gamma = 0, IV gamma = k1 = k2 (free B). Semi-trivial waves:
// I gamma in (0,k1), II gamma = k1, III gamma in (k1,3k1), IV gamma = 3k1.
enum class CaseId { I, II, III, IV };

struct CaseTag {
  Scenario scenario;
  CaseId case_id;
};

// Throws std::domain_error for parameters outside every case region.
CaseTag classify(const waves::ModelParams& params);

const char* to_string(Scenario s);
const char* to_string(CaseId c);

// Hill coefficients (beta_1..beta_4): the linearization about the wave block-
// diagonalizes into -d^2 + omega - beta_i phi^2 in slot order (1,3,2,4).
std::array<double, 4> betas(const waves::ModelParams& params);

// The 4x4 coupling matrix S of the linearization, its orthogonal
// diagonalizer R, and M = diag(beta1, beta3, beta2, beta4) with S = R M R^T.
struct BlockData {
  std::array<double, 4> betas;
  Eigen::Matrix4d S;
  Eigen::Matrix4d R;
  Eigen::Matrix4d M;
  // Paper-style block label occupying diagonal slot s of R^T L R.
  static constexpr std::array<int, 4> slot_block = {1, 3, 2, 4};
};

BlockData block_data(const waves::ModelParams& params);

enum class Verdict { Stable, Unstable, Inconclusive };

const char* to_string(Verdict v);

// Stable iff n_L == n_V, Unstable iff the difference is odd, Inconclusive
// otherwise (even and nonzero).
Verdict krein_verdict(int n_L, int n_V);

// A four-component grid function spanning part of the kernel of the
// linearized operator.
struct KernelVector {
  std::array<Eigen::VectorXd, 4> components;
  std::string label;
};

// The case's kernel basis, sampled on the grid and verified to be annihilated
// by the discretized operator (throws std::runtime_error otherwise). Throws
// std::invalid_argument for case/parity/family combinations without a table.
std::vector<KernelVector> kernel_basis(const CaseTag& tag,
                                       const waves::WaveProfile& profile,
                                       const waves::ModelParams& params,
                                       const Grid& grid, Parity parity);

// Gram-type matrix V_jl = (L^{-1} J Theta_j, J Theta_l) over the kernel basis,
// evaluated blockwise through the diagonalization R.
Eigen::MatrixXd build_V(const CaseTag& tag, const waves::WaveProfile& profile,
                        const waves::ModelParams& params, const Grid& grid,
                        Parity parity, double zero_tol = hillops::kDefaultZeroTol);

struct KreinReport {
  int n_L = 0;
  int z_L = 0;
  std::optional<int> n_V;   // absent when the index pipeline was refused
  std::optional<int> diff;  // n_L - n_V when available
  Verdict verdict = Verdict::Inconclusive;
  Eigen::MatrixXd V;
  std::vector<std::string> kernel_labels;
  bool index_backed = true;
  std::string reason;  // why the pipeline was refused, when it was
};

// Discretization of J L as a real 4M x 4M matrix (M = parity-restricted dim).
Eigen::MatrixXd assemble_JL(const waves::WaveProfile& profile,
                            const waves::ModelParams& params, const Grid& grid,
                            Parity parity);
Eigen::MatrixXd assemble_JL(const std::vector<double>& phi_samples, double omega,
                            const waves::ModelParams& params, const Grid& grid,
                            Parity parity);

struct JLReport {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<double> residuals;  // ||JL v - lambda v|| / max(1,|lambda|), v unit
  double max_re = 0.0;            // over eigenvalues with residual <= 1e-6
  double re_tol = 0.0;
  Verdict verdict = Verdict::Stable;
  bool index_backed = true;  // false when the Krein side is inconclusive
};

// Nonsymmetric eigendecomposition of the JL matrix (LAPACK dgeev, balanced).
// Stable iff max |Re lambda| <= re_tol among well-resolved eigenvalues.
JLReport jl_spectrum(const Eigen::MatrixXd& jl, double re_tol);

struct Tolerances {
  double zero_tol = hillops::kDefaultZeroTol;
  std::optional<double> re_tol;  // absolute; defaults to 1e-4 * omega
  };

struct FullReport {
  CaseTag tag{Scenario::Multiple, CaseId::I};
  waves::ModelParams params;
  waves::WaveProfile profile;
  Parity parity = Parity::Full;
  std::array<double, 4> slot_betas{};  // (beta1, beta3, beta2, beta4)
  std::array<hillops::SpectralSummary, 4> blocks;
  KreinReport krein;
  JLReport jl;
};

// Raised when the Krein verdict and the direct JL verdict disagree on a
// configuration where both are decisive. Carries the full diagnostics.
class AgreementFailure : public std::runtime_error {
 public:
  AgreementFailure(const std::string& what, FullReport report);
  const FullReport& report() const { return report_; }

 private:
  FullReport report_;
};

// Classifies the case, assembles the four Hill blocks, counts their spectra,
// builds the kernel basis and V, forms the Krein verdict, and cross-checks it
// against the direct JL spectrum. Configurations the index theory cannot
// classify (cnoidal multiple Case II and semi-trivial Case I, full space) skip
// the V step and report Inconclusive with a reason.
FullReport full_report(const waves::ModelParams& params,
                       const waves::WaveProfile& profile, Parity parity,
                       const Grid& grid, const Tolerances& tols = {});

FullReport full_report(const waves::ModelParams& params, waves::WaveFamily family,
                       double length, double omega, Parity parity, const Grid& grid,
                       const Tolerances& tols = {});

}  // namespace hillkrein::stability
