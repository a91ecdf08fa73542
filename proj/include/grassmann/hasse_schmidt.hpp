#pragma once

// Hasse-Schmidt derivations induced by an endomorphism of V_n.
//
// D(z) = sum_k D_k z^k is determined by D(z) b_j = sum_i f^i(b_j) z^i and
// multiplicativity, so on a basis word
//   D_k(b_{i_1} ^ ... ^ b_{i_r}) = sum over k_1 + ... + k_r = k of
//                                  f^{k_1} b_{i_1} ^ ... ^ f^{k_r} b_{i_r}.
// Series are always truncated at an explicit order.

#include <string>
#include <vector>

#include "grassmann/exterior.hpp"

namespace grassmann {

// n x n matrix over a scalar domain. Entry (i, j) is the b_i-coefficient of
// f(b_j), so column j is the image of b_j.
class Endomorphism {
 public:
  Endomorphism(int n, DomainKind kind, std::vector<Scalar> row_major);

  static Endomorphism zero(int n, DomainKind kind);
  static Endomorphism identity(int n, DomainKind kind);
  // f(b_i) = b_{i+1}, with f(b_{n-1}) = 0.
  static Endomorphism shift(int n, DomainKind kind);

  int rank() const { return n_; }
  DomainKind kind() const { return kind_; }
  const Scalar& entry(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * n_ + col)];
  }
  const std::vector<Scalar>& entries() const { return entries_; }

  // f(b_j) as a degree-1 multivector.
  MultiVector image(int j) const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int n_;
  DomainKind kind_;
  std::vector<Scalar> entries_;
};

// Matrix action on a degree-1 element with zero neg slots.
MultiVector endo_apply(const Endomorphism& f, const MultiVector& v);

// Truncated power series in z with multivector coefficients; powers above
// trunc() are dropped on insertion.
class ZPolynomial {
 public:
  ZPolynomial(int n, DomainKind kind, int trunc);

  int rank() const { return n_; }
  DomainKind kind() const { return kind_; }
  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }

  const MultiVector& coefficient(int k) const;
  const std::vector<MultiVector>& coefficients() const { return coeffs_; }

  // Adds x * z^k; silently ignored for k > trunc().
  void add_to(int k, const MultiVector& x);
  // Adds p * z^shift coefficientwise.
  void add_shifted(const ZPolynomial& p, int shift);

  // Highest power with a nonzero coefficient, -1 for the zero series.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  std::string to_string() const;

  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

 private:
  int n_;
  DomainKind kind_;
  std::vector<MultiVector> coeffs_;
};

// Cauchy product with wedge on coefficients, truncated at min of the two
// truncation orders.
ZPolynomial series_wedge(const ZPolynomial& a, const ZPolynomial& b);

// Left-wedges every coefficient by u.
ZPolynomial wedge_left(const MultiVector& u, const ZPolynomial& p);

// All compositions of k into r nonnegative parts, in lexicographic order.
std::vector<std::vector<int>> compositions(int k, int r);

// D(z) of a fixed endomorphism, with f^i(b_j) memoized per instance. An
// instance is not shared between threads.
class HasseSchmidt {
 public:
  explicit HasseSchmidt(Endomorphism f);

  const Endomorphism& endomorphism() const { return f_; }

  // f^k(b_j)
  const MultiVector& power_image(int k, int j);

  // D_k x. D_0 is the identity.
  MultiVector coefficient(int k, const MultiVector& x);
  // [D_0 x, ..., D_trunc x]
  ZPolynomial series(const MultiVector& x, int trunc);

 private:
  Endomorphism f_;
  std::vector<std::vector<MultiVector>> powers_;  // powers_[k][j] = f^k(b_j)
};

MultiVector hs_coefficient(const Endomorphism& f, int k, const MultiVector& x);
ZPolynomial hs_series(const Endomorphism& f, const MultiVector& x, int trunc);

struct LeibnizResult {
  bool exact = true;       // lhs == rhs coefficientwise
  bool surpasses = true;   // rhs surpasses lhs coefficientwise
  int failing_order = -1;  // first z-power where the two sides differ
  ZPolynomial lhs;         // D(z)(u ^ v)
  ZPolynomial rhs;         // sum_{i+j=k} D_i u ^ D_j v
};

// Compares D_k(u ^ v) with sum_{i+j=k} D_i u ^ D_j v for every k <= trunc.
// The two agree exactly when every pair of terms of u and v has disjoint
// support. A shared index i contributes D(b_i) ^ D(b_i) on the right, which
// is a quasi-zero rather than zero, so in general only the surpassing
// relation holds.
LeibnizResult check_leibniz(const Endomorphism& f, const MultiVector& u, const MultiVector& v, int trunc);

// Higher derivation of a single derivation delta over the rationals: the
// Schur polynomials D_1..D_4 of the sequence d_1, d_2, ... with every d_k
// replaced by delta, evaluated on a degree-1 element.
MultiVector schur_higher_derivation(const Endomorphism& delta, int r, const MultiVector& x);

// Monomials of D_r as (coefficient, [k_1, ..., k_s]) meaning c * d_{k_1}...d_{k_s}.
struct SchurMonomial {
  Rational coefficient;
  std::vector<int> factors;
};
const std::vector<SchurMonomial>& schur_polynomial(int r);

}  // namespace grassmann
