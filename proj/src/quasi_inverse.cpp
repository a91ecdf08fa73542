#include "grassmann/quasi_inverse.hpp"

namespace grassmann {

namespace {

void require_degree_at_least(const MultiVector& x, int d, const char* what) {
  if (!x.is_zero() && x.min_degree() < d) {
    throw DegreeError(std::string(what) + " needs terms of degree >= " + std::to_string(d) + ", found degree " +
                      std::to_string(x.min_degree()));
  }
}

int pure_degree_of(const MultiVector& x, const char* what) {
  const auto d = x.homogeneous_degree();
  if (!d) throw DegreeError(std::string(what) + " must be a nonzero element of pure degree");
  return *d;
}

ZPolynomial step(HasseSchmidt& hs, int u_index, const ZPolynomial& p) {
  const Endomorphism& f = hs.endomorphism();
  const MultiVector bu = MultiVector::basis_vector(f.rank(), f.kind(), u_index);
  const MultiVector& fu = hs.power_image(1, u_index);
  ZPolynomial out(p.rank(), p.kind(), p.trunc() + 1);
  for (int k = 0; k <= p.trunc(); ++k) {
    const MultiVector& c = p.coefficient(k);
    if (c.is_zero()) continue;
    require_degree_at_least(c, 1, "ovd_step operand");
    out.add_to(k, wedge(bu, c));
    out.add_to(k + 1, negate(wedge(fu, c)));
  }
  return out;
}

}  // namespace

ZPolynomial ovd_step(const Endomorphism& f, int u_index, const ZPolynomial& p) {
  if (p.rank() != f.rank() || p.kind() != f.kind()) throw DomainMismatch("endomorphism and polynomial disagree");
  if (u_index < 0 || u_index >= f.rank()) throw DegreeError("basis index out of range");
  HasseSchmidt hs(f);
  return step(hs, u_index, p);
}

QuasiInverse::QuasiInverse(const Endomorphism& f) : hs_(f) {}

const ZPolynomial& QuasiInverse::of_word(Word w) {
  if (auto it = memo_.find(w.mask()); it != memo_.end()) return it->second;
  const Endomorphism& f = hs_.endomorphism();
  const int n = f.rank();
  const DomainKind kind = f.kind();
  const std::vector<int> idx = w.indices();
  if (idx.size() < 2) throw DegreeError("quasi-inverse is built on degree >= 2, got word " + w.to_string());

  ZPolynomial result(n, kind, static_cast<int>(idx.size()));
  if (idx.size() == 2) {
    const MultiVector u = MultiVector::basis_vector(n, kind, idx[0]);
    const MultiVector v = MultiVector::basis_vector(n, kind, idx[1]);
    result.add_to(0, wedge(u, v));
    result.add_to(1, hs_.coefficient(1, wedge(v, u)));
    result.add_to(2, wedge(hs_.power_image(1, idx[0]), hs_.power_image(1, idx[1])));
  } else {
    const Word rest(w.mask() & (w.mask() - 1));  // drop the lowest index
    const ZPolynomial inner = of_word(rest);
    result = step(hs_, idx[0], inner);
  }
  return memo_.emplace(w.mask(), std::move(result)).first->second;
}

ZPolynomial QuasiInverse::apply(const MultiVector& x) {
  const Endomorphism& f = hs_.endomorphism();
  if (x.rank() != f.rank() || x.kind() != f.kind()) throw DomainMismatch("endomorphism and multivector disagree");
  require_degree_at_least(x, 2, "quasi-inverse");
  ZPolynomial out(x.rank(), x.kind(), std::max(x.max_degree(), 0));
  for (const auto& [w, c] : x.terms()) {
    const ZPolynomial& p = of_word(w);
    for (int k = 0; k <= p.trunc(); ++k) out.add_to(k, p.coefficient(k).scaled(c));
  }
  return out;
}

ZPolynomial quasi_inverse(const Endomorphism& f, const MultiVector& x) {
  return QuasiInverse(f).apply(x);
}

EigenData eigen_data(const Endomorphism& f) {
  const int n = f.rank();
  if (n < 2) throw DegreeError("eigenvalue pairs need rank >= 2");
  QuasiInverse qi(f);
  const Word top = Word::top(n);
  const MultiVector zeta = MultiVector::basis_word(n, f.kind(), top);
  const ZPolynomial dbar = qi.apply(zeta);
  EigenData data{n, {}, {}};
  for (int i = 0; i <= n; ++i) {
    data.e.push_back(dbar.coefficient(i).coefficient(top));
    data.h.push_back(qi.derivation().coefficient(i, zeta).coefficient(top));
  }
  return data;
}

std::vector<Scalar> net_eigen_coefficients(const EigenData& data) {
  std::vector<Scalar> out;
  for (const PairScalar& p : data.e) out.push_back(p.pos + p.neg.negated());
  return out;
}

CheckResult check_quasi_inverse(const Endomorphism& f, const MultiVector& x, int trunc) {
  const int n = f.rank();
  if (x.is_zero() || x.min_degree() < 2) throw DegreeError("check_quasi_inverse needs a nonzero element of degree >= 2");
  if (trunc < x.max_degree() + n) {
    throw DegreeError("truncation " + std::to_string(trunc) + " below degree + n = " + std::to_string(x.max_degree() + n));
  }
  QuasiInverse qi(f);
  HasseSchmidt& hs = qi.derivation();

  ZPolynomial dbar_d(n, f.kind(), trunc);
  const ZPolynomial dx = hs.series(x, trunc);
  for (int k = 0; k <= trunc; ++k) {
    if (!dx.coefficient(k).is_zero()) dbar_d.add_shifted(qi.apply(dx.coefficient(k)), k);
  }

  ZPolynomial d_dbar(n, f.kind(), trunc);
  const ZPolynomial dbar_x = qi.apply(x);
  for (int j = 0; j <= dbar_x.trunc() && j <= trunc; ++j) {
    d_dbar.add_shifted(hs.series(dbar_x.coefficient(j), trunc - j), j);
  }

  const std::pair<const char*, const ZPolynomial*> composites[] = {{"Dbar D", &dbar_d}, {"D Dbar", &d_dbar}};
  for (const auto& [name, poly] : composites) {
    if (!mv_surpasses(x, poly->coefficient(0))) {
      return {false, poly->coefficient(0), std::string(name) + ": z^0 coefficient does not surpass x"};
    }
    for (int k = 1; k <= trunc - n; ++k) {
      if (!is_balanced(poly->coefficient(k))) {
        return {false, poly->coefficient(k), std::string(name) + ": z^" + std::to_string(k) + " coefficient is not a quasi-zero"};
      }
    }
  }
  return {true, MultiVector(n, f.kind()), {}};
}

CheckResult check_prech(const Endomorphism& f, const MultiVector& u, const MultiVector& v, int trunc) {
  const int n = f.rank();
  const int du = pure_degree_of(u, "u");
  const int dv = pure_degree_of(v, "v");
  if (du < 1) throw DegreeError("u must have degree >= 1");
  if (dv < 2) throw DegreeError("v must have degree >= 2");
  if (du + dv > n) throw DegreeError("deg u + deg v exceeds n");
  if (trunc < n + du) throw DegreeError("truncation must be at least n + deg u");

  QuasiInverse qi(f);
  const ZPolynomial du_series = qi.derivation().series(u, trunc);
  ZPolynomial lhs(n, f.kind(), trunc);
  for (int k = 0; k <= trunc; ++k) {
    const MultiVector w = wedge(du_series.coefficient(k), v);
    if (!w.is_zero()) lhs.add_shifted(qi.apply(w), k);
  }
  const ZPolynomial dbar_v = qi.apply(v);
  ZPolynomial rhs(n, f.kind(), trunc);
  rhs.add_shifted(wedge_left(u, dbar_v), 0);

  for (int k = 0; k <= trunc; ++k) {
    if (!mv_surpasses(rhs.coefficient(k), lhs.coefficient(k))) {
      return {false, lhs.coefficient(k),
              "z^" + std::to_string(k) + ": " + lhs.coefficient(k).to_string() + " does not surpass " +
                  rhs.coefficient(k).to_string()};
    }
  }
  return {true, MultiVector(n, f.kind()), {}};
}

PrechehResult check_precheh(const EigenData& data) {
  const DomainKind kind = data.e.front().kind();
  PairScalar sum = PairScalar::zero(kind);
  for (int i = 0; i <= data.n; ++i) {
    sum = sum + pair_mul(data.e[static_cast<std::size_t>(i)], data.h[static_cast<std::size_t>(data.n - i)]);
  }
  return {surpass_witness(PairScalar::zero(kind), sum), sum};
}

PrechehResult check_precheh(const Endomorphism& f) { return check_precheh(eigen_data(f)); }

CheckResult check_cayley_hamilton(const EigenData& data, HasseSchmidt& d, const MultiVector& u, const MultiVector& v) {
  const int n = data.n;
  const int du = pure_degree_of(u, "u");
  if (du < 1) throw DegreeError("u must have degree >= 1");
  if (!v.has_pure_degree(n - du)) {
    throw DegreeError("v must have degree n - deg u = " + std::to_string(n - du));
  }
  MultiVector x(n, u.kind());
  MultiVector y(n, u.kind());
  for (int k = 0; k <= n; ++k) {
    const MultiVector term = wedge(d.coefficient(n - k, u), v);
    if (term.is_zero()) continue;
    x += term.scaled(data.e[static_cast<std::size_t>(k)].pos);
    y += term.scaled(data.e[static_cast<std::size_t>(k)].neg);
  }
  MultiVector residual = x + negate(y);
  const bool holds = is_balanced(residual);
  return {holds, std::move(residual), holds ? std::string() : "Cayley-Hamilton residual is not a quasi-zero"};
}

CheckResult check_cayley_hamilton(const Endomorphism& f, const MultiVector& u, const MultiVector& v) {
  HasseSchmidt d(f);
  return check_cayley_hamilton(eigen_data(f), d, u, v);
}

CheckResult check_cayley_hamilton(const Endomorphism& f, Word u, Word v) {
  const int n = f.rank();
  if (u.degree() < 1) throw DegreeError("u must have degree >= 1");
  if (u.degree() + v.degree() != n) throw DegreeError("deg u + deg v must equal n");
  return check_cayley_hamilton(f, MultiVector::basis_word(n, f.kind(), u), MultiVector::basis_word(n, f.kind(), v));
}

CheckResult ch_corollary_residual(const Endomorphism& f, const MultiVector& u) {
  const int n = f.rank();
  const int du = pure_degree_of(u, "u");
  if (du < 2) throw DegreeError("the corollary form needs deg u >= 2 (no negation map in degree 1)");
  const EigenData data = eigen_data(f);
  HasseSchmidt d(f);
  MultiVector residual(n, f.kind());
  for (int k = 0; k <= n; ++k) {
    const MultiVector term = d.coefficient(n - k, u);
    residual += term.scaled(data.e[static_cast<std::size_t>(k)].pos);
    residual += negate(term.scaled(data.e[static_cast<std::size_t>(k)].neg));
  }
  const bool holds = is_balanced(residual);
  return {holds, std::move(residual), holds ? std::string() : "corollary residual is not a quasi-zero"};
}

}  // namespace grassmann
