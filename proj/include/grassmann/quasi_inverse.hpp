#pragma once

// The canonical quasi-inverse Dbar{z} of D(z), eigenvalue pairs on the top
// exterior power, and decision procedures for the surpassing relations that
// lead to the Cayley-Hamilton theorem over a semiring.
//
// Dbar is built on words of degree >= 2:
//   Dbar(u ^ v)     = u ^ v + D_1(v ^ u) z + (D_1 u ^ D_1 v) z^2
//   Dbar(u_1 ^ w)   = u_1 ^ Dbar(w) + z * (-)(D_1 u_1 ^ Dbar(w))
// and extended linearly. On a word of degree m it is a polynomial of
// z-degree at most m.

#include <map>
#include <string>
#include <vector>

#include "grassmann/hasse_schmidt.hpp"

namespace grassmann {

// b_u ^ P + z * (-)(f(b_u) ^ P). Every coefficient of P must have degree >= 1.
ZPolynomial ovd_step(const Endomorphism& f, int u_index, const ZPolynomial& p);

// Dbar{z} x for x with all terms of degree >= 2.
ZPolynomial quasi_inverse(const Endomorphism& f, const MultiVector& x);

// Memoizes Dbar on basis words and shares the f^k table with a HasseSchmidt
// engine. One instance per thread.
class QuasiInverse {
 public:
  explicit QuasiInverse(const Endomorphism& f);

  const Endomorphism& endomorphism() const { return hs_.endomorphism(); }
  HasseSchmidt& derivation() { return hs_; }

  // Trunc of the result is the highest degree present in x.
  ZPolynomial apply(const MultiVector& x);
  const ZPolynomial& of_word(Word w);

 private:
  HasseSchmidt hs_;
  std::map<std::uint32_t, ZPolynomial> memo_;
};

// Eigenvalue pairs of Dbar_i (e) and of D_i (h) on zeta = b_0 ^ ... ^ b_{n-1}:
// e[i] is the coefficient pair of zeta in Dbar_i zeta, h[i] the one in D_i zeta.
// e[0] = h[0] = (1, 0).
struct EigenData {
  int n = 0;
  std::vector<PairScalar> e;
  std::vector<PairScalar> h;
};

EigenData eigen_data(const Endomorphism& f);

// e_k - e'_k for domains with negation: the coefficient of lambda^(n-k) in
// det(lambda I - f).
std::vector<Scalar> net_eigen_coefficients(const EigenData& data);

struct CheckResult {
  bool holds = true;
  MultiVector residual;  // zero when nothing failed
  std::string detail;    // empty when holds
};

// Dbar{z} D(z) x and D(z) Dbar{z} x both surpass x: the z^0 coefficient
// surpasses x and every z^k with 1 <= k <= trunc - n is balanced.
// Requires trunc >= degree(x) + n.
CheckResult check_quasi_inverse(const Endomorphism& f, const MultiVector& x, int trunc);

// Dbar{z}(D(z)u ^ v) surpasses u ^ Dbar{z}v at every z-power up to trunc.
// u of pure degree >= 1, v of pure degree >= 2, deg u + deg v <= n,
// trunc >= n + deg u.
CheckResult check_prech(const Endomorphism& f, const MultiVector& u, const MultiVector& v, int trunc);

struct PrechehResult {
  bool holds = true;
  PairScalar sum;  // sum_i e_i h_{n-i}; its pos part is the displayed scalar sum
};

// sum_{i=0}^{n} e_i h_{n-i} is a quasi-zero.
PrechehResult check_precheh(const Endomorphism& f);
PrechehResult check_precheh(const EigenData& data);

// residual = X + (-)Y with X = sum_k e_k (D_{n-k}u ^ v), Y = the same with
// e'_k. Holds iff the residual is balanced. deg u >= 1 and
// deg u + deg v = n.
CheckResult check_cayley_hamilton(const Endomorphism& f, const MultiVector& u, const MultiVector& v);
CheckResult check_cayley_hamilton(const Endomorphism& f, Word u, Word v);
CheckResult check_cayley_hamilton(const EigenData& data, HasseSchmidt& d, const MultiVector& u, const MultiVector& v);

// residual = sum_k e_k D_{n-k}u + (-) e'_k D_{n-k}u for u of pure degree >= 2.
CheckResult ch_corollary_residual(const Endomorphism& f, const MultiVector& u);

}  // namespace grassmann
