#pragma once

namespace hillkrein::elliptic {

// Values of the Jacobi elliptic functions at a common argument and modulus.
// Satisfies sn^2 + cn^2 = 1 and dn^2 + k^2 sn^2 = 1.
struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// Complete elliptic integral of the first kind, K(k), for k in [0,1).
// Computed by the arithmetic-geometric mean iteration.
double complete_K(double k);

// Complete elliptic integral of the second kind, E(k), for k in [0,1].
double complete_E(double k);

// dK/dk = (E - (1-k^2) K) / (k (1-k^2)),  0 < k < 1.
double dK_dk(double k);

// dE/dk = (E - K) / k,  0 < k < 1.
double dE_dk(double k);

// sn, cn, dn at argument u, modulus k in [0,1), by descending Landen
// transformation. k here is the modulus, never the parameter m = k^2.
JacobiTriple jacobi(double u, double k);

}  // namespace hillkrein::elliptic
