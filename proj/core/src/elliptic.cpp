#include "hillkrein/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hillkrein::elliptic {

namespace {

constexpr double kAgmStop = 1e-15;         // |a-b| <= kAgmStop * a terminates the AGM
constexpr double kTrigModulus = 1e-8;      // below this, sn/cn/dn are trigonometric
constexpr int kMaxLandenDepth = 16;

}  // namespace

double complete_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw std::domain_error("complete_K: modulus must lie in [0,1)");
  }
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  while (std::abs(a - b) > kAgmStop * a) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

double complete_E(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw std::domain_error("complete_E: modulus must lie in [0,1]");
  }
  if (k == 1.0) return 1.0;
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  double sum = 0.5 * k * k;  // 2^{n-1} c_n^2 starting from c_0 = k
  double factor = 0.5;
  while (std::abs(a - b) > kAgmStop * a) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    factor *= 2.0;
    sum += factor * c * c;
  }
  return std::numbers::pi / (2.0 * a) * (1.0 - sum);
}

double dK_dk(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    throw std::domain_error("dK_dk: modulus must lie in (0,1)");
  }
  const double K = complete_K(k);
  const double E = complete_E(k);
  return (E - (1.0 - k * k) * K) / (k * (1.0 - k * k));
}

double dE_dk(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    throw std::domain_error("dE_dk: modulus must lie in (0,1)");
  }
  return (complete_E(k) - complete_K(k)) / k;
}

JacobiTriple jacobi(double u, double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw std::domain_error("jacobi: modulus must lie in [0,1)");
  }
  if (!std::isfinite(u)) {
    throw std::domain_error("jacobi: argument must be finite");
  }

  // Descending Landen chain k -> k1 -> ... until the modulus is negligible.
  std::array<double, kMaxLandenDepth> chain{};
  int depth = 0;
  double km = k;
  while (km >= kTrigModulus && depth < kMaxLandenDepth) {
    const double kp = std::sqrt((1.0 - km) * (1.0 + km));
    km = (1.0 - kp) / (1.0 + kp);
    chain[depth++] = km;
  }

  double v = u;
  for (int j = 0; j < depth; ++j) v /= 1.0 + chain[j];

  double sn = std::sin(v);
  double cn = std::cos(v);
  double dn = 1.0;
  for (int j = depth - 1; j >= 0; --j) {
    const double kd = chain[j];
    const double denom = 1.0 + kd * sn * sn;
    const double sn_up = (1.0 + kd) * sn / denom;
    const double cn_up = cn * dn / denom;
    sn = sn_up;
    cn = cn_up;
    const double ku = (j == 0) ? k : chain[j - 1];
    dn = std::sqrt(1.0 - ku * ku * sn * sn);
  }
  if (depth == 0) dn = std::sqrt(1.0 - k * k * sn * sn);
  return {sn, cn, dn};
}

}  // namespace hillkrein::elliptic
