#include "hillkrein/stability.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <utility>

namespace hillkrein::stability {

namespace {

using hillops::DiscreteOperator;
using waves::BMode;
using waves::ModelParams;
using waves::WaveFamily;
using waves::WaveProfile;

constexpr double kTieTol = 1e-12;

Eigen::Matrix4d coupling_matrix(const ModelParams& p) {
  const double b = waves::coupling_B(p);
  const double k1 = p.kappa1, k2 = p.kappa2, g = p.gamma;
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s(0, 0) = 3.0 * k1 + g * b * b;
  s(0, 1) = s(1, 0) = 2.0 * g * b;
  s(1, 1) = 3.0 * k2 * b * b + g;
  s(2, 2) = k1 - g * b * b;
  s(2, 3) = s(3, 2) = 2.0 * g * b;
  s(3, 3) = k2 * b * b - g;
  return s;
}

// Orthonormal eigenvectors of one symmetric 2x2 block, columns matched to the
// two target eigenvalues without replacement; the dominant entry of each
// column is made positive so a diagonal block yields the identity.
Eigen::Matrix2d block_eigvecs(const Eigen::Matrix2d& t, double target0, double target1) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(t);
  const Eigen::Vector2d lam = es.eigenvalues();
  int pick0 = (std::abs(lam(0) - target0) <= std::abs(lam(1) - target0)) ? 0 : 1;
  Eigen::Matrix2d r;
  r.col(0) = es.eigenvectors().col(pick0);
  r.col(1) = es.eigenvectors().col(1 - pick0);
  (void)target1;
  for (int c = 0; c < 2; ++c) {
    const int imax = std::abs(r(0, c)) >= std::abs(r(1, c)) ? 0 : 1;
    if (r(imax, c) < 0.0) r.col(c) = -r.col(c);
  }
  return r;
}

struct SlotOps {
  std::array<DiscreteOperator, 4> ops;
  std::array<hillops::SpectralSummary, 4> summaries;
};

SlotOps make_slot_ops(const BlockData& bd, const WaveProfile& profile, const Grid& grid,
                      Parity parity, double zero_tol) {
  const auto phi = waves::wave_samples(profile, grid);
  SlotOps so{{hillops::assemble_hill(bd.M(0, 0), phi, profile.omega, grid, parity),
              hillops::assemble_hill(bd.M(1, 1), phi, profile.omega, grid, parity),
              hillops::assemble_hill(bd.M(2, 2), phi, profile.omega, grid, parity),
              hillops::assemble_hill(bd.M(3, 3), phi, profile.omega, grid, parity)},
             {}};
  for (int s = 0; s < 4; ++s) {
    so.summaries[s] = hillops::spectral_summary(so.ops[s], zero_tol);
  }
  return so;
}

std::array<Eigen::VectorXd, 4> apply_J(const std::array<Eigen::VectorXd, 4>& v) {
  return {v[2], v[3], -v[0], -v[1]};
}

// Components of R^T w, acting on the 4-component index.
std::array<Eigen::VectorXd, 4> rotate_components(const Eigen::Matrix4d& r,
                                                 const std::array<Eigen::VectorXd, 4>& w) {
  std::array<Eigen::VectorXd, 4> out;
  for (int s = 0; s < 4; ++s) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(w[0].size());
    for (int c = 0; c < 4; ++c) {
      if (r(c, s) != 0.0) acc += r(c, s) * w[c];
    }
    out[s] = std::move(acc);
  }
  return out;
}

bool krein_refused(const CaseTag& tag, WaveFamily family, Parity parity,
                   std::string* reason) {
  const bool cn_like =
      family == WaveFamily::Cnoidal || family == WaveFamily::SnoidalShift;
  if (tag.scenario == Scenario::Multiple && tag.case_id == CaseId::II &&
      parity == Parity::Full && cn_like) {
    if (reason) {
      *reason =
          "comparison-theorem trichotomy: n(L3) undetermined for the cnoidal "
          "wave in the full space";
    }
    return true;
  }
  if (tag.scenario == Scenario::SemiTrivial && tag.case_id == CaseId::I &&
      parity == Parity::Full) {
    if (reason) {
      *reason =
          "comparison-theorem trichotomy: n(L3) undetermined for the "
          "semi-trivial wave in the full space";
    }
    return true;
  }
  return false;
}

void check_family_parity(const CaseTag& tag, WaveFamily family, Parity parity) {
  if (parity == Parity::Even) {
    throw std::invalid_argument(
        "full_report: no case table for the even parity subspace");
  }
  if (parity == Parity::Odd && family != WaveFamily::SnoidalShift) {
    throw std::invalid_argument(
        "full_report: odd-subspace analysis requires the snoidal-shift profile");
  }
  if (parity == Parity::Full) {
    if (tag.scenario == Scenario::SemiTrivial && family != WaveFamily::Cnoidal) {
      throw std::invalid_argument(
          "full_report: semi-trivial full-space analysis requires the cnoidal profile");
    }
    if (tag.scenario == Scenario::Multiple && family == WaveFamily::SnoidalShift) {
      throw std::invalid_argument(
          "full_report: full-space analysis uses the dnoidal or cnoidal profile");
    }
  }
}

int count_negative(const Eigen::MatrixXd& v) {
  if (v.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v);
  const double tol = 1e-8 * std::max(1.0, v.cwiseAbs().maxCoeff());
  int n = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) < -tol) ++n;
  }
  return n;
}

}  // namespace

const char* to_string(Scenario s) {
  return s == Scenario::Multiple ? "multiple" : "semi-trivial";
}

const char* to_string(CaseId c) {
  switch (c) {
    case CaseId::I: return "I";
    case CaseId::II: return "II";
    case CaseId::III: return "III";
    case CaseId::IV: return "IV";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Unstable: return "unstable";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CaseTag classify(const ModelParams& params) {
  params.validate();
  const double g = params.gamma;
  if (params.b_mode == BMode::SemiTrivial) {
    const double k1 = params.kappa1;
    const double tol = kTieTol * std::max(1.0, k1);
    if (std::abs(g - k1) <= tol) return {Scenario::SemiTrivial, CaseId::II};
    if (std::abs(g - 3.0 * k1) <= tol) return {Scenario::SemiTrivial, CaseId::IV};
    if (g > 0.0 && g < k1) return {Scenario::SemiTrivial, CaseId::I};
    if (g > k1 && g < 3.0 * k1) return {Scenario::SemiTrivial, CaseId::III};
    throw std::domain_error(
        "classify: semi-trivial case table covers gamma in (0, 3 kappa1] only");
  }
  if (params.b_mode == BMode::Free) return {Scenario::Multiple, CaseId::IV};
  if (g == 0.0) return {Scenario::Multiple, CaseId::III};
  const double lo = std::min(params.kappa1, params.kappa2);
  const double hi = std::max(params.kappa1, params.kappa2);
  if (g < lo) return {Scenario::Multiple, CaseId::I};
  if (g > hi) return {Scenario::Multiple, CaseId::II};
  throw std::domain_error("classify: gamma between the kappas is inadmissible");
}

std::array<double, 4> betas(const ModelParams& params) {
  params.validate();
  const double k1 = params.kappa1, k2 = params.kappa2, g = params.gamma;
  switch (params.b_mode) {
    case BMode::Free: {
      const double c = (params.b_free * params.b_free + 1.0) * g;
      return {3.0 * c, c, c, -c};
    }
    case BMode::SemiTrivial:
      return {3.0 * k1, k1, g, -g};
    case BMode::Derived: {
      if (std::abs(g - k2) <= kTieTol * std::max(1.0, k2)) {
        throw std::domain_error("betas: gamma = kappa2 has a vanishing denominator");
      }
      const double d = g - k2;
      return {3.0 * (g * g - k1 * k2) / d, (g * g - k1 * k2) / d,
              (-g * g + 2.0 * g * (k1 + k2) - 3.0 * k1 * k2) / d,
              (-3.0 * g * g + 2.0 * g * (k1 + k2) - k1 * k2) / d};
    }
  }
  return {};
}

BlockData block_data(const ModelParams& params) {
  BlockData bd;
  bd.betas = betas(params);
  bd.S = coupling_matrix(params);
  bd.M = Eigen::Vector4d(bd.betas[0], bd.betas[2], bd.betas[1], bd.betas[3]).asDiagonal();
  bd.R = Eigen::Matrix4d::Zero();
  bd.R.topLeftCorner<2, 2>() =
      block_eigvecs(bd.S.topLeftCorner<2, 2>(), bd.M(0, 0), bd.M(1, 1));
  bd.R.bottomRightCorner<2, 2>() =
      block_eigvecs(bd.S.bottomRightCorner<2, 2>(), bd.M(2, 2), bd.M(3, 3));
  const double err =
      (bd.S - bd.R * bd.M * bd.R.transpose()).cwiseAbs().maxCoeff();
  if (err > 1e-10 * std::max(1.0, bd.S.cwiseAbs().maxCoeff())) {
    throw std::runtime_error("block_data: similarity S = R M R^T failed");
  }
  return bd;
}

Verdict krein_verdict(int n_L, int n_V) {
  const int diff = n_L - n_V;
  if (diff == 0) return Verdict::Stable;
  if (diff % 2 != 0) return Verdict::Unstable;
  return Verdict::Inconclusive;
}

std::vector<KernelVector> kernel_basis(const CaseTag& tag, const WaveProfile& profile,
                                       const ModelParams& params, const Grid& grid,
                                       Parity parity) {
  check_family_parity(tag, profile.family, parity);
  const int n = grid.size();
  const auto phi_v = waves::wave_samples(profile, grid);
  const auto dphi_v = waves::wave_deriv_samples(profile, grid);
  const Eigen::VectorXd phi = Eigen::Map<const Eigen::VectorXd>(phi_v.data(), n);
  const Eigen::VectorXd dphi = Eigen::Map<const Eigen::VectorXd>(dphi_v.data(), n);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  const double b = waves::coupling_B(params);
  const bool shifted = profile.family == WaveFamily::SnoidalShift;
  const std::string w = shifted ? "psi" : "phi";
  const std::string dw = w + "'";

  auto vec = [&](const Eigen::VectorXd& f, double c0, double c1, double c2, double c3,
                 std::string label) {
    KernelVector kv;
    kv.components = {c0 == 0.0 ? zero : Eigen::VectorXd(c0 * f),
                     c1 == 0.0 ? zero : Eigen::VectorXd(c1 * f),
                     c2 == 0.0 ? zero : Eigen::VectorXd(c2 * f),
                     c3 == 0.0 ? zero : Eigen::VectorXd(c3 * f)};
    kv.label = std::move(label);
    return kv;
  };

  std::vector<KernelVector> basis;
  if (tag.scenario == Scenario::Multiple) {
    if (parity == Parity::Full) {
      switch (tag.case_id) {
        case CaseId::I:
        case CaseId::II:
          basis.push_back(vec(dphi, 1, b, 0, 0, "(" + dw + ", B " + dw + ", 0, 0)"));
          basis.push_back(vec(phi, 0, 0, 1, b, "(0, 0, " + w + ", B " + w + ")"));
          break;
        case CaseId::III:
          basis.push_back(vec(dphi, 1, 0, 0, 0, "(" + dw + ", 0, 0, 0)"));
          basis.push_back(vec(dphi, 0, 1, 0, 0, "(0, " + dw + ", 0, 0)"));
          basis.push_back(vec(phi, 0, 0, 1, 0, "(0, 0, " + w + ", 0)"));
          basis.push_back(vec(phi, 0, 0, 0, 1, "(0, 0, 0, " + w + ")"));
          break;
        case CaseId::IV:
          basis.push_back(vec(dphi, 1, b, 0, 0, "(" + dw + ", B " + dw + ", 0, 0)"));
          basis.push_back(vec(phi, -b, 1, 0, 0, "(-B " + w + ", " + w + ", 0, 0)"));
          basis.push_back(vec(phi, 0, 0, 1, b, "(0, 0, " + w + ", B " + w + ")"));
          break;
      }
    } else {
      switch (tag.case_id) {
        case CaseId::I:
        case CaseId::II:
          basis.push_back(vec(phi, 0, 0, 1, b, "(0, 0, " + w + ", B " + w + ")"));
          break;
        case CaseId::III:
          basis.push_back(vec(phi, 0, 0, 1, 0, "(0, 0, " + w + ", 0)"));
          basis.push_back(vec(phi, 0, 0, 0, 1, "(0, 0, 0, " + w + ")"));
          break;
        case CaseId::IV:
          basis.push_back(vec(phi, -b, 1, 0, 0, "(-B " + w + ", " + w + ", 0, 0)"));
          basis.push_back(vec(phi, 0, 0, 1, b, "(0, 0, " + w + ", B " + w + ")"));
          break;
      }
    }
  } else {
    if (parity == Parity::Full) {
      switch (tag.case_id) {
        case CaseId::I:
          throw std::invalid_argument(
              "kernel_basis: semi-trivial Case I (full space) has no complete kernel "
              "table; the spectral analysis is refused there");
        case CaseId::II:
          basis.push_back(vec(dphi, 1, 0, 0, 0, "(" + dw + ", 0, 0, 0)"));
          basis.push_back(vec(phi, 0, 1, 0, 0, "(0, " + w + ", 0, 0)"));
          basis.push_back(vec(phi, 0, 0, 1, 0, "(0, 0, " + w + ", 0)"));
          break;
        case CaseId::III:
          basis.push_back(vec(dphi, 1, 0, 0, 0, "(" + dw + ", 0, 0, 0)"));
          basis.push_back(vec(phi, 0, 0, 1, 0, "(0, 0, " + w + ", 0)"));
          break;
        case CaseId::IV:
          basis.push_back(vec(dphi, 1, 0, 0, 0, "(" + dw + ", 0, 0, 0)"));
          basis.push_back(vec(dphi, 0, 1, 0, 0, "(0, " + dw + ", 0, 0)"));
          basis.push_back(vec(phi, 0, 0, 1, 0, "(0, 0, " + w + ", 0)"));
          break;
      }
    } else {
      switch (tag.case_id) {
        case CaseId::I:
        case CaseId::III:
        case CaseId::IV:
          basis.push_back(vec(phi, 0, 0, 1, 0, "(0, 0, " + w + ", 0)"));
          break;
        case CaseId::II:
          basis.push_back(vec(phi, 0, 1, 0, 0, "(0, " + w + ", 0, 0)"));
          basis.push_back(vec(phi, 0, 0, 1, 0, "(0, 0, " + w + ", 0)"));
          break;
      }
    }
  }

  // Verify each vector is annihilated by the discretized operator.
  const BlockData bd = block_data(params);
  const SlotOps so = make_slot_ops(bd, profile, grid, parity, hillops::kDefaultZeroTol);
  for (const auto& kv : basis) {
    const auto rotated = rotate_components(bd.R, kv.components);
    double norm2 = 0.0, res2 = 0.0;
    for (int s = 0; s < 4; ++s) {
      const Eigen::VectorXd c =
          hillops::restrict_to_parity(grid, parity, rotated[s]);
      norm2 += c.squaredNorm();
      res2 += (so.ops[s].matrix * c).squaredNorm();
    }
    const double scale = std::max(1.0, std::abs(profile.omega)) * std::sqrt(norm2);
    if (std::sqrt(res2) > 1e-6 * scale) {
      throw std::runtime_error("kernel_basis: listed kernel vector " + kv.label +
                               " is not annihilated (relative residual " +
                               std::to_string(std::sqrt(res2) / scale) + ")");
    }
  }
  return basis;
}

Eigen::MatrixXd build_V(const CaseTag& tag, const WaveProfile& profile,
                        const ModelParams& params, const Grid& grid, Parity parity,
                        double zero_tol) {
  const auto basis = kernel_basis(tag, profile, params, grid, parity);
  const BlockData bd = block_data(params);
  const SlotOps so = make_slot_ops(bd, profile, grid, parity, zero_tol);

  const int m = (int)basis.size();
  // Per-vector rotated components of J Theta and the per-slot solves.
  std::vector<std::array<Eigen::VectorXd, 4>> rhs(m), sol(m);
  for (int j = 0; j < m; ++j) {
    const auto rotated = rotate_components(bd.R, apply_J(basis[j].components));
    double theta_norm = 0.0;
    for (int s = 0; s < 4; ++s) theta_norm += rotated[s].squaredNorm();
    theta_norm = std::sqrt(theta_norm);
    for (int s = 0; s < 4; ++s) {
      if (rotated[s].norm() <= 1e-12 * theta_norm) {
        rhs[j][s] = Eigen::VectorXd();
        continue;
      }
      rhs[j][s] = hillops::restrict_to_parity(grid, parity, rotated[s]);
      try {
        sol[j][s] = hillops::solve_on_range(so.ops[s], rhs[j][s], zero_tol);
      } catch (const hillops::NotInRangeError& e) {
        throw hillops::NotInRangeError(
            std::string("build_V: block L") +
            std::to_string(BlockData::slot_block[s]) + " for " + basis[j].label +
            ": " + e.what());
      }
    }
  }

  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(m, m);
  const double weight = grid.quadrature_weight();
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < m; ++l) {
      double total = 0.0;
      for (int s = 0; s < 4; ++s) {
        if (sol[j][s].size() == 0 || rhs[l][s].size() == 0) continue;
        total += weight * sol[j][s].dot(rhs[l][s]);
      }
      v(j, l) = total;
    }
  }
  return 0.5 * (v + v.transpose());
}

Eigen::MatrixXd assemble_JL(const WaveProfile& profile, const ModelParams& params,
                            const Grid& grid, Parity parity) {
  const int n = grid.size();
  const int m = restricted_dim(grid, parity);
  const Eigen::Matrix4d s = coupling_matrix(params);
  const auto phi = waves::wave_samples(profile, grid);

  Eigen::MatrixXd free_full = -second_derivative_matrix(grid);
  free_full.diagonal().array() += profile.omega;
  Eigen::VectorXd phi2(n);
  for (int j = 0; j < n; ++j) phi2(j) = phi[j] * phi[j];

  Eigen::MatrixXd basis;
  if (parity != Parity::Full) {
    basis = (parity == Parity::Odd) ? sine_basis(grid) : cosine_basis(grid);
  }
  auto project = [&](const Eigen::MatrixXd& block) -> Eigen::MatrixXd {
    if (parity == Parity::Full) return block;
    return basis.transpose() * block * basis;
  };

  const Eigen::MatrixXd free_p = project(free_full);
  const Eigen::MatrixXd phi2_p = project(Eigen::MatrixXd(phi2.asDiagonal()));

  Eigen::MatrixXd lmat = Eigen::MatrixXd::Zero(4 * m, 4 * m);
  for (int i = 0; i < 4; ++i) {
    for (int c = 0; c < 4; ++c) {
      Eigen::MatrixXd block = -s(i, c) * phi2_p;
      if (i == c) block += free_p;
      lmat.block(i * m, c * m, m, m) = block;
    }
  }
  // J acts on the component index: (a,b,c,d) -> (c,d,-a,-b).
  Eigen::MatrixXd jl(4 * m, 4 * m);
  jl.topRows(2 * m) = lmat.bottomRows(2 * m);
  jl.bottomRows(2 * m) = -lmat.topRows(2 * m);
  return jl;
}

JLReport jl_spectrum(const Eigen::MatrixXd& jl, double re_tol) {
  if (!(re_tol > 0.0)) {
    throw std::invalid_argument("jl_spectrum: re_tol must be positive");
  }
  const int n = (int)jl.rows();
  if (jl.cols() != n || n == 0) {
    throw std::invalid_argument("jl_spectrum: matrix must be square and nonempty");
  }
  Eigen::MatrixXd a = jl;  // dgeev overwrites its input
  Eigen::VectorXd wr(n), wi(n);
  Eigen::MatrixXd vr(n, n);
  const int info =
      LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'V', n, a.data(), n, wr.data(), wi.data(),
                    nullptr, n, vr.data(), n);
  if (info != 0) {
    throw std::runtime_error("jl_spectrum: dgeev failed with info " +
                             std::to_string(info));
  }

  const Eigen::MatrixXd av = jl * vr;
  JLReport rep;
  rep.re_tol = re_tol;
  rep.eigenvalues.reserve(n);
  rep.residuals.reserve(n);
  for (int j = 0; j < n; ++j) {
    const std::complex<double> lam(wr(j), wi(j));
    double res;
    if (wi(j) == 0.0) {
      res = (av.col(j) - wr(j) * vr.col(j)).norm();
    } else {
      // Conjugate pair stored as two real columns (re, im).
      const int jre = (wi(j) > 0.0) ? j : j - 1;
      const Eigen::VectorXd re = vr.col(jre), im = vr.col(jre + 1);
      const double sgn = (wi(j) > 0.0) ? 1.0 : -1.0;
      const Eigen::VectorXd r_re = av.col(jre) - wr(j) * re + sgn * wi(j) * im;
      const Eigen::VectorXd r_im = sgn * (av.col(jre + 1) - wr(j) * im) - wi(j) * re;
      res = std::sqrt(r_re.squaredNorm() + r_im.squaredNorm());
    }
    res /= std::max(1.0, std::abs(lam));
    rep.eigenvalues.push_back(lam);
    rep.residuals.push_back(res);
  }

  double max_re = 0.0;
  for (int j = 0; j < n; ++j) {
    if (rep.residuals[j] <= 1e-6) {
      max_re = std::max(max_re, std::abs(rep.eigenvalues[j].real()));
    }
  }
  rep.max_re = max_re;
  rep.verdict = (max_re <= re_tol) ? Verdict::Stable : Verdict::Unstable;
  return rep;
}

AgreementFailure::AgreementFailure(const std::string& what, FullReport report)
    : std::runtime_error(what), report_(std::move(report)) {}

FullReport full_report(const ModelParams& params, const WaveProfile& profile,
                       Parity parity, const Grid& grid, const Tolerances& tols) {
  FullReport rep;
  rep.tag = classify(params);
  rep.params = params;
  rep.profile = profile;
  rep.parity = parity;
  check_family_parity(rep.tag, profile.family, parity);

  const BlockData bd = block_data(params);
  rep.slot_betas = {bd.M(0, 0), bd.M(1, 1), bd.M(2, 2), bd.M(3, 3)};
  const SlotOps so = make_slot_ops(bd, profile, grid, parity, tols.zero_tol);
  rep.blocks = so.summaries;
  rep.krein.n_L = 0;
  rep.krein.z_L = 0;
  for (const auto& s : so.summaries) {
    rep.krein.n_L += s.n_neg;
    rep.krein.z_L += s.z_ker;
  }

  std::string reason;
  if (krein_refused(rep.tag, profile.family, parity, &reason)) {
    rep.krein.index_backed = false;
    rep.krein.reason = reason;
    rep.krein.verdict = Verdict::Inconclusive;
  } else {
    const auto basis = kernel_basis(rep.tag, profile, params, grid, parity);
    for (const auto& kv : basis) rep.krein.kernel_labels.push_back(kv.label);
    rep.krein.V = build_V(rep.tag, profile, params, grid, parity, tols.zero_tol);
    rep.krein.n_V = count_negative(rep.krein.V);
    rep.krein.diff = rep.krein.n_L - *rep.krein.n_V;
    rep.krein.verdict = krein_verdict(rep.krein.n_L, *rep.krein.n_V);
  }

  const double re_tol = tols.re_tol.value_or(1e-4 * profile.omega);
  rep.jl = jl_spectrum(assemble_JL(profile, params, grid, parity), re_tol);
  rep.jl.index_backed = rep.krein.verdict != Verdict::Inconclusive;

  if (rep.krein.verdict != Verdict::Inconclusive &&
      rep.jl.verdict != rep.krein.verdict) {
    throw AgreementFailure(
        std::string("full_report: Krein verdict (") + to_string(rep.krein.verdict) +
            ") disagrees with the JL spectrum verdict (" + to_string(rep.jl.verdict) +
            ")",
        rep);
  }
  return rep;
}

FullReport full_report(const ModelParams& params, WaveFamily family, double length,
                       double omega, Parity parity, const Grid& grid,
                       const Tolerances& tols) {
  return full_report(params, WaveProfile::from_omega(family, length, omega, params),
                     parity, grid, tols);
}

}  // namespace hillkrein::stability
