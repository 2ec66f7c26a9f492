#pragma once

#include <string>
#include <vector>

#include "hillkrein/waves.hpp"

namespace hillkrein::etaprobe {

// Fundamental-solution and forced-response runs of the cnoidal Hill equation
// -u'' + omega u - phi^2 u = f, integrated as a first-order system by an
// adaptive embedded Runge-Kutta (dopri5) with dense output. phi is always the
// unit-scale cnoidal wave here.

struct IvpOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int output_nodes = 1025;  // uniform resample of the dense output, endpoints included
  double x_end = 0.0;       // integration endpoint; 0 means one full period
};

struct IvpSolution {
  std::vector<double> nodes;
  std::vector<double> y;
  std::vector<double> yprime;
  double end_value = 0.0;   // y at the endpoint, from the integrator state
  double end_slope = 0.0;
  double quad = 0.0;        // integral of phi'(x) y(x), carried as an extra state
};

// Solves -y'' + omega y - phi^2 y = 0 with y(0) = 0, y'(0) = 1/phi(0); the
// second solution next to phi itself, normalized so the Wronskian is 1.
// Throws std::runtime_error when |y(L)| <= 1e-8 max|y| (the construction
// divides by y(L)).
IvpSolution solve_y(const waves::WaveProfile& unit_cnoidal, const IvpOptions& opts = {});

// Solves the forced equation -chi'' + omega chi - phi^2 chi = phi' with
// chi(0) = 0 and chi'(0) = -(1/y(L)) \int_0^L phi' y dx, which selects the
// periodic odd solution.
IvpSolution solve_chi(const waves::WaveProfile& unit_cnoidal, const IvpSolution& y,
                      const IvpOptions& opts = {});

struct EtaSample {
  double modulus = 0.0;
  double eta = 0.0;
  double chi_phi_inner = 0.0;  // (chi, phi') = eta / L
  bool ok = true;
  std::string error;
};

// eta(k) = L (chi, phi'), the sign certificate for (L2^{-1} phi', phi').
EtaSample eta(double modulus, double length, const IvpOptions& opts = {});

// Uniformly spaced samples on [k_min, k_max]; per-sample failures are
// recorded in the sample, not thrown.
std::vector<EtaSample> eta_curve(double k_min, double k_max, int n_points,
                                 double length, const IvpOptions& opts = {});

}  // namespace hillkrein::etaprobe
