#pragma once

#include <vector>

#include "hillkrein/grid.hpp"

namespace hillkrein::waves {

// How the second-component multiple B is determined.
//  Derived     : B = sqrt((kappa1-gamma)/(kappa2-gamma)) (B = sqrt(kappa1/kappa2) at gamma=0)
//  Free        : gamma = kappa1 = kappa2 and B is a free real parameter
//  SemiTrivial : second component identically zero (B = 0)
enum class BMode { Derived, Free, SemiTrivial };

struct ModelParams {
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double gamma = 0.0;
  BMode b_mode = BMode::Derived;
  double b_free = 0.0;  // used only in Free mode

  static ModelParams derived(double kappa1, double kappa2, double gamma);
  static ModelParams free_b(double gamma, double b);
  static ModelParams semi_trivial(double kappa1, double kappa2, double gamma);

  // Throws std::domain_error on invalid couplings (non-positive kappas,
  // negative gamma, Derived mode with gamma strictly between the kappas,
  // Free mode without gamma = kappa1 = kappa2).
  void validate() const;
};

double coupling_B(const ModelParams& params);

enum class WaveFamily { Dnoidal, Cnoidal, SnoidalShift };

// One member of a periodic standing-wave family. cscale = kappa1 + gamma B^2
// normalizes the amplitude; under the multiple-wave constraint it equals
// kappa2 B^2 + gamma.
struct WaveProfile {
  WaveFamily family = WaveFamily::Dnoidal;
  double length = 0.0;   // period L
  double modulus = 0.0;  // elliptic modulus k
  double omega = 0.0;    // frequency
  double cscale = 1.0;

  static WaveProfile from_modulus(WaveFamily family, double length, double modulus,
                                  const ModelParams& params);
  static WaveProfile from_omega(WaveFamily family, double length, double omega,
                                const ModelParams& params);
  // Unscaled wave (cscale = 1), the normalization used in the eta probe.
  static WaveProfile with_unit_scale(WaveFamily family, double length, double modulus);
};

// Frequency from modulus: 4(2-k^2)K(k)^2/L^2 (dnoidal, k in (0,1)) or
// 16 K(k)^2 (2k^2-1)/L^2 (cnoidal and snoidal shift, k in (1/sqrt2, 1)).
double omega_from_k(WaveFamily family, double length, double modulus);

// Inverse of omega_from_k by bisection on the monotone map.
// Throws std::domain_error for omega outside the family's range.
double k_from_omega(WaveFamily family, double length, double omega);

double eval_wave(const WaveProfile& profile, double x);
double eval_wave_deriv(const WaveProfile& profile, double x);
std::vector<double> wave_samples(const WaveProfile& profile, const Grid& grid);
std::vector<double> wave_deriv_samples(const WaveProfile& profile, const Grid& grid);

// Sup-norm of -phi'' + omega phi - cscale phi^3 over the grid, with phi''
// computed by spectral differentiation of the samples.
double ode_residual(const WaveProfile& profile, const Grid& grid);

// Closed-form squared L^2 norm over one period:
// dnoidal 8 E K / (L cscale); cnoidal (and its shift) 32 K (E - (1-k^2)K) / (L cscale).
double l2_norm_sq(const WaveProfile& profile);

// d/domega of the closed-form norm via the chain rule through k.
double d_l2_domega(const WaveProfile& profile);

// Complex pair (u, v) stored as (Re u, Re v, Im u, Im v) samples.
struct ComplexPairSamples {
  std::vector<double> re_u, re_v, im_u, im_v;
};

double conserved_E(const ModelParams& params, const Grid& grid, const ComplexPairSamples& w);
double conserved_F(const Grid& grid, const ComplexPairSamples& w);

}  // namespace hillkrein::waves
