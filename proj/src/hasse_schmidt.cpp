#include "grassmann/hasse_schmidt.hpp"

#include <functional>

namespace grassmann {

Endomorphism::Endomorphism(int n, DomainKind kind, std::vector<Scalar> row_major)
    : n_(n), kind_(kind), entries_(std::move(row_major)) {
  if (n < 1 || n > kMaxRank) throw DegreeError("endomorphism rank " + std::to_string(n) + " unsupported");
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DegreeError("endomorphism needs " + std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
  }
  for (const Scalar& s : entries_) {
    if (s.kind() != kind) throw DomainMismatch("matrix entry from another domain");
  }
}

Endomorphism Endomorphism::zero(int n, DomainKind kind) {
  return Endomorphism(n, kind, std::vector<Scalar>(static_cast<std::size_t>(n * n), Scalar::zero(kind)));
}

Endomorphism Endomorphism::identity(int n, DomainKind kind) {
  std::vector<Scalar> m(static_cast<std::size_t>(n * n), Scalar::zero(kind));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = Scalar::one(kind);
  return Endomorphism(n, kind, std::move(m));
}

Endomorphism Endomorphism::shift(int n, DomainKind kind) {
  std::vector<Scalar> m(static_cast<std::size_t>(n * n), Scalar::zero(kind));
  for (int j = 0; j + 1 < n; ++j) m[static_cast<std::size_t>((j + 1) * n + j)] = Scalar::one(kind);
  return Endomorphism(n, kind, std::move(m));
}

MultiVector Endomorphism::image(int j) const {
  MultiVector out(n_, kind_);
  for (int i = 0; i < n_; ++i) out.add_term(Word::basis(i), PairScalar::embed(entry(i, j)));
  return out;
}

MultiVector endo_apply(const Endomorphism& f, const MultiVector& v) {
  if (v.rank() != f.rank() || v.kind() != f.kind()) throw DomainMismatch("endomorphism and vector disagree on rank or domain");
  MultiVector out(f.rank(), f.kind());
  for (const auto& [w, c] : v.terms()) {
    if (w.degree() != 1) throw DegreeError("endo_apply needs a degree-1 element, found term " + w.to_string());
    if (!c.neg.is_zero()) throw NegationUndefined("degree-1 coefficient with nonzero neg slot");
    const int j = std::countr_zero(w.mask());
    for (int i = 0; i < f.rank(); ++i) {
      out.add_term(Word::basis(i), PairScalar::embed(f.entry(i, j) * c.pos));
    }
  }
  return out;
}

ZPolynomial::ZPolynomial(int n, DomainKind kind, int trunc) : n_(n), kind_(kind) {
  if (trunc < 0) throw DegreeError("truncation order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(trunc) + 1, MultiVector(n, kind));
}

const MultiVector& ZPolynomial::coefficient(int k) const {
  if (k < 0 || k > trunc()) throw DegreeError("z-power " + std::to_string(k) + " beyond truncation " + std::to_string(trunc()));
  return coeffs_[static_cast<std::size_t>(k)];
}

void ZPolynomial::add_to(int k, const MultiVector& x) {
  if (k < 0) throw DegreeError("negative z-power");
  if (k > trunc()) return;
  coeffs_[static_cast<std::size_t>(k)] += x;
}

void ZPolynomial::add_shifted(const ZPolynomial& p, int shift) {
  for (int k = 0; k <= p.trunc() && k + shift <= trunc(); ++k) add_to(k + shift, p.coefficient(k));
}

int ZPolynomial::degree() const {
  for (int k = trunc(); k >= 0; --k) {
    if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) return k;
  }
  return -1;
}

std::string ZPolynomial::to_string() const {
  std::string out;
  for (int k = 0; k <= trunc(); ++k) {
    const MultiVector& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string body = c.terms().size() > 1 ? "[" + c.to_string() + "]" : c.to_string();
    out += k == 0 ? body : body + " z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

ZPolynomial series_wedge(const ZPolynomial& a, const ZPolynomial& b) {
  if (a.rank() != b.rank() || a.kind() != b.kind()) throw DomainMismatch("series disagree on rank or domain");
  const int t = std::min(a.trunc(), b.trunc());
  ZPolynomial out(a.rank(), a.kind(), t);
  for (int i = 0; i <= t; ++i) {
    if (a.coefficient(i).is_zero()) continue;
    for (int j = 0; i + j <= t; ++j) out.add_to(i + j, wedge(a.coefficient(i), b.coefficient(j)));
  }
  return out;
}

ZPolynomial wedge_left(const MultiVector& u, const ZPolynomial& p) {
  ZPolynomial out(p.rank(), p.kind(), p.trunc());
  for (int k = 0; k <= p.trunc(); ++k) out.add_to(k, wedge(u, p.coefficient(k)));
  return out;
}

std::vector<std::vector<int>> compositions(int k, int r) {
  std::vector<std::vector<int>> out;
  if (k < 0 || r < 0) return out;
  if (r == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> parts(static_cast<std::size_t>(r), 0);
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == r - 1) {
      parts[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(parts);
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      parts[static_cast<std::size_t>(pos)] = p;
      fill(pos + 1, remaining - p);
    }
  };
  fill(0, k);
  return out;
}

HasseSchmidt::HasseSchmidt(Endomorphism f) : f_(std::move(f)) {
  std::vector<MultiVector> identity;
  for (int j = 0; j < f_.rank(); ++j) identity.push_back(MultiVector::basis_vector(f_.rank(), f_.kind(), j));
  powers_.push_back(std::move(identity));
}

const MultiVector& HasseSchmidt::power_image(int k, int j) {
  if (k < 0) throw DegreeError("negative power");
  while (static_cast<int>(powers_.size()) <= k) {
    std::vector<MultiVector> next;
    next.reserve(powers_.back().size());
    for (const MultiVector& v : powers_.back()) next.push_back(endo_apply(f_, v));
    powers_.push_back(std::move(next));
  }
  return powers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

MultiVector HasseSchmidt::coefficient(int k, const MultiVector& x) {
  if (x.rank() != f_.rank() || x.kind() != f_.kind()) throw DomainMismatch("endomorphism and multivector disagree on rank or domain");
  if (k < 0) throw DegreeError("negative Hasse-Schmidt order");
  MultiVector out(x.rank(), x.kind());
  if (k == 0) return x;
  for (const auto& [w, c] : x.terms()) {
    const std::vector<int> idx = w.indices();
    MultiVector word_image(x.rank(), x.kind());
    for (const auto& parts : compositions(k, static_cast<int>(idx.size()))) {
      MultiVector term = MultiVector::scalar(x.rank(), Scalar::one(x.kind()));
      for (std::size_t s = 0; s < idx.size() && !term.is_zero(); ++s) {
        term = wedge(term, power_image(parts[s], idx[s]));
      }
      word_image += term;
    }
    out += word_image.scaled(c);
  }
  return out;
}

ZPolynomial HasseSchmidt::series(const MultiVector& x, int trunc) {
  ZPolynomial out(x.rank(), x.kind(), trunc);
  for (int k = 0; k <= trunc; ++k) out.add_to(k, coefficient(k, x));
  return out;
}

MultiVector hs_coefficient(const Endomorphism& f, int k, const MultiVector& x) {
  return HasseSchmidt(f).coefficient(k, x);
}

ZPolynomial hs_series(const Endomorphism& f, const MultiVector& x, int trunc) {
  return HasseSchmidt(f).series(x, trunc);
}

LeibnizResult check_leibniz(const Endomorphism& f, const MultiVector& u, const MultiVector& v, int trunc) {
  HasseSchmidt d(f);
  const ZPolynomial du = d.series(u, trunc);
  const ZPolynomial dv = d.series(v, trunc);
  LeibnizResult result{true, true, -1, d.series(wedge(u, v), trunc), ZPolynomial(u.rank(), u.kind(), trunc)};
  for (int k = 0; k <= trunc; ++k) {
    for (int i = 0; i <= k; ++i) result.rhs.add_to(k, wedge(du.coefficient(i), dv.coefficient(k - i)));
    const MultiVector& lhs = result.lhs.coefficient(k);
    const MultiVector& rhs = result.rhs.coefficient(k);
    if (result.exact && !(lhs == rhs)) {
      result.exact = false;
      result.failing_order = k;
    }
    if (!mv_surpasses(lhs, rhs)) result.surpasses = false;
  }
  return result;
}

const std::vector<SchurMonomial>& schur_polynomial(int r) {
  // D_1 = d_1
  // D_2 = d_1^2/2 + d_2
  // D_3 = d_1^3/3! + d_1 d_2 + d_3
  // D_4 = d_1^4/4! + d_1^2 d_2/2 + d_2^2/2 + d_1 d_3 + d_4
  static const std::vector<std::vector<SchurMonomial>> table{
      {{Rational(1), {1}}},
      {{Rational(1, 2), {1, 1}}, {Rational(1), {2}}},
      {{Rational(1, 6), {1, 1, 1}}, {Rational(1), {1, 2}}, {Rational(1), {3}}},
      {{Rational(1, 24), {1, 1, 1, 1}},
       {Rational(1, 2), {1, 1, 2}},
       {Rational(1, 2), {2, 2}},
       {Rational(1), {1, 3}},
       {Rational(1), {4}}},
  };
  if (r < 1 || r > 4) throw DegreeError("Schur higher derivation implemented for orders 1..4, got " + std::to_string(r));
  return table[static_cast<std::size_t>(r - 1)];
}

MultiVector schur_higher_derivation(const Endomorphism& delta, int r, const MultiVector& x) {
  if (delta.kind() != DomainKind::Rationals) {
    throw UnsupportedDomain("Schur higher derivation divides by factorials; needs the rat domain");
  }
  if (!x.has_pure_degree(1)) throw DegreeError("Schur higher derivation acts on degree-1 elements");
  const auto& monomials = schur_polynomial(r);
  MultiVector out(x.rank(), x.kind());
  for (const SchurMonomial& m : monomials) {
    // Every d_k is delta, so a monomial of s factors is delta^s.
    MultiVector term = x;
    for (std::size_t s = 0; s < m.factors.size(); ++s) term = endo_apply(delta, term);
    out += term.scaled(Scalar::from_rational(DomainKind::Rationals, m.coefficient));
  }
  return out;
}

}  // namespace grassmann
