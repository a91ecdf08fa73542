#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace grassmann;

namespace {

constexpr DomainKind kInt = DomainKind::Integers;

Scalar I(long v) { return Scalar::from_integer(kInt, v); }
PairScalar IP(long a, long b) { return {I(a), I(b)}; }
MultiVector b(int n, int i, DomainKind kind = kInt) { return MultiVector::basis_vector(n, kind, i); }

Endomorphism swap2() { return Endomorphism(2, kInt, {I(0), I(1), I(1), I(0)}); }

ZPolynomial single(const MultiVector& x) {
  ZPolynomial p(x.rank(), x.kind(), 0);
  p.add_to(0, x);
  return p;
}

bool truncated_equal(const ZPolynomial& a, const ZPolynomial& c) {
  const int t = std::max(a.trunc(), c.trunc());
  for (int k = 0; k <= t; ++k) {
    const MultiVector za(a.rank(), a.kind());
    const MultiVector& x = k <= a.trunc() ? a.coefficient(k) : za;
    const MultiVector& y = k <= c.trunc() ? c.coefficient(k) : za;
    if (!(x == y)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ovd_step examples") {
  const ZPolynomial r0 = ovd_step(Endomorphism::zero(3, kInt), 0, single(b(3, 1)));
  CHECK(truncated_equal(r0, single(wedge(b(3, 0), b(3, 1)))));

  const ZPolynomial r1 = ovd_step(swap2(), 0, single(b(2, 1)));
  CHECK(truncated_equal(r1, single(wedge(b(2, 0), b(2, 1)))));

  const ZPolynomial r2 = ovd_step(Endomorphism::shift(5, kInt), 1, single(b(5, 2)));
  CHECK(truncated_equal(r2, single(wedge(b(5, 1), b(5, 2)))));

  ZPolynomial scalar_poly(3, kInt, 0);
  scalar_poly.add_to(0, MultiVector::scalar(3, I(1)));
  CHECK_THROWS(ovd_step(Endomorphism::identity(3, kInt), 0, scalar_poly));
}

TEST_CASE("quasi_inverse examples") {
  const MultiVector x = wedge(b(2, 0), b(2, 1));
  CHECK(truncated_equal(quasi_inverse(Endomorphism::zero(2, kInt), x), single(x)));

  const ZPolynomial q = quasi_inverse(swap2(), x);
  CHECK(q.coefficient(0) == x);
  CHECK(q.coefficient(1).is_zero());
  CHECK(q.coefficient(2).coefficient(Word::top(2)) == IP(0, 1));

  CHECK_THROWS_AS(quasi_inverse(swap2(), b(2, 0)), DegreeError);
  CHECK_THROWS_AS(quasi_inverse(swap2(), MultiVector::scalar(2, I(1))), DegreeError);
  CHECK(quasi_inverse(swap2(), MultiVector(2, kInt)).is_zero());
}

TEST_CASE("quasi_inverse matches the slotwise expansion") {
  for (DomainKind kind : oracle::all_domains()) {
    CAPTURE(domain_name(kind));
    InstanceGenerator gen(kind, 41);
    for (int t = 0; t < 60; ++t) {
      const int n = gen.uniform(2, 4);
      const Endomorphism f = gen.endomorphism(n);
      const Word w = gen.word(n, gen.uniform(2, n));
      const ZPolynomial q = quasi_inverse(f, MultiVector::basis_word(n, kind, w));
      for (int k = 0; k <= w.degree(); ++k) {
        const MultiVector got = k <= q.trunc() ? q.coefficient(k) : MultiVector(n, kind);
        REQUIRE(oracle::naive_quasi_inverse(f, w.indices(), k).matches(got));
      }
    }
  }
}

TEST_CASE("degree-2 closed form") {
  for (DomainKind kind : oracle::all_domains()) {
    InstanceGenerator gen(kind, 42);
    for (int t = 0; t < 200; ++t) {
      const int n = gen.uniform(2, 5);
      const Endomorphism f = gen.endomorphism(n);
      const MultiVector u = gen.homogeneous(n, 1);
      const MultiVector v = gen.homogeneous(n, 1);
      const MultiVector uv = wedge(u, v);
      ZPolynomial want(n, kind, 2);
      want.add_to(0, uv);
      want.add_to(1, hs_coefficient(f, 1, wedge(v, u)));
      want.add_to(2, wedge(endo_apply(f, u), endo_apply(f, v)));
      const ZPolynomial got = quasi_inverse(f, uv);
      // Closed form on words, extended linearly: compare word by word.
      ZPolynomial linear(n, kind, 2);
      for (const auto& [w, c] : uv.terms()) {
        const std::vector<int> idx = w.indices();
        const MultiVector bu = b(n, idx[0], kind), bv = b(n, idx[1], kind);
        ZPolynomial one(n, kind, 2);
        one.add_to(0, wedge(bu, bv));
        one.add_to(1, hs_coefficient(f, 1, wedge(bv, bu)));
        one.add_to(2, wedge(endo_apply(f, bu), endo_apply(f, bv)));
        for (int k = 0; k <= 2; ++k) linear.add_to(k, one.coefficient(k).scaled(c));
      }
      REQUIRE(truncated_equal(got, linear));
      // The single-vector closed form holds up to the quasi-zeros u ^ u, v ^ v drop.
      for (int k = 0; k <= 2; ++k) {
        const MultiVector& g = k <= got.trunc() ? got.coefficient(k) : MultiVector(n, kind);
        REQUIRE(mv_surpasses(g, want.coefficient(k)));
      }
    }
  }
}

TEST_CASE("z-degree of the quasi-inverse is at most the word degree") {
  for (DomainKind kind : oracle::all_domains()) {
    CAPTURE(domain_name(kind));
    InstanceGenerator gen(kind, 43);
    int full = 0;
    for (int t = 0; t < 500; ++t) {
      const int n = gen.uniform(2, 5);
      const Endomorphism f = gen.endomorphism(n);
      const Word w = gen.word(n, gen.uniform(2, n));
      const int m = w.degree();
      const ZPolynomial q = quasi_inverse(f, MultiVector::basis_word(n, kind, w));
      REQUIRE(q.degree() <= m);
      // The top coefficient is (-)^(m-2) f(b_{i_1}) ^ ... ^ f(b_{i_m}).
      MultiVector top = MultiVector::scalar(n, Scalar::one(kind));
      for (int i : w.indices()) top = wedge(top, f.image(i));
      if (m % 2 == 1) top = negate(top);
      const MultiVector got = m <= q.trunc() ? q.coefficient(m) : MultiVector(n, kind);
      REQUIRE(got == top);
      REQUIRE((q.degree() == m) == !top.is_zero());
      if (q.degree() == m) ++full;
    }
    CHECK(full > 0);
  }
}

TEST_CASE("degree-3 expansion shape for shift-type maps") {
  // For u_1, u_2, v distinct basis vectors with D_1 = f shifting indices:
  // Dbar(u_1 ^ u_2) ^ v = u_1^u_2^v + (u_2^D_1u_1^v + u_1^v^D_1u_2) z + v^D_1u_1^D_1u_2 z^2
  const int n = 5;
  InstanceGenerator gen(kInt, 44);
  for (int t = 0; t < 100; ++t) {
    std::vector<Scalar> m(n * n, I(0));
    for (int j = 0; j + 1 < n; ++j) m[static_cast<std::size_t>((j + 1) * n + j)] = gen.nonzero_scalar();
    const Endomorphism f(n, kInt, m);
    const Word w = gen.word(n, 3);
    std::vector<int> idx = w.indices();
    const MultiVector u1 = b(n, idx[0]), u2 = b(n, idx[1]), v = b(n, idx[2]);
    const MultiVector du1 = endo_apply(f, u1), du2 = endo_apply(f, u2);
    const ZPolynomial q = quasi_inverse(f, wedge(u1, u2));
    auto coeff = [&](int k) { return k <= q.trunc() ? wedge(q.coefficient(k), v) : MultiVector(n, kInt); };
    REQUIRE(coeff(0) == wedge(wedge(u1, u2), v));
    REQUIRE(coeff(1) == wedge(wedge(u2, du1), v) + wedge(wedge(u1, v), du2));
    REQUIRE(coeff(2) == wedge(wedge(v, du1), du2));
  }
}

TEST_CASE("eigen_data examples") {
  const EigenData z = eigen_data(Endomorphism::zero(3, kInt));
  CHECK(z.e[0] == IP(1, 0));
  for (int i = 1; i <= 3; ++i) {
    CHECK(z.e[static_cast<std::size_t>(i)].is_zero());
    CHECK(z.h[static_cast<std::size_t>(i)].is_zero());
  }

  const EigenData s = eigen_data(swap2());
  CHECK(s.e == std::vector<PairScalar>{IP(1, 0), IP(0, 0), IP(0, 1)});
  CHECK(s.h == std::vector<PairScalar>{IP(1, 0), IP(0, 0), IP(2, 1)});

  const DomainKind bl = DomainKind::Booleans;
  const Scalar one = Scalar::one(bl), zero = Scalar::zero(bl);
  const EigenData ones = eigen_data(Endomorphism(2, bl, {one, one, one, one}));
  CHECK(ones.e == std::vector<PairScalar>{{one, zero}, {zero, one}, {one, one}});
}

TEST_CASE("eigen_data matches naive top-word expansions") {
  for (DomainKind kind : oracle::all_domains()) {
    CAPTURE(domain_name(kind));
    InstanceGenerator gen(kind, 45);
    for (int t = 0; t < 40; ++t) {
      const int n = gen.uniform(2, 3);
      const Endomorphism f = gen.endomorphism(n);
      const EigenData d = eigen_data(f);
      std::vector<int> top;
      for (int i = 0; i < n; ++i) top.push_back(i);
      for (int k = 0; k <= n; ++k) {
        REQUIRE(d.e[static_cast<std::size_t>(k)] == oracle::naive_quasi_inverse(f, top, k).at(top));
        REQUIRE(d.h[static_cast<std::size_t>(k)] == oracle::naive_hs(f, top, k).at(top));
      }
    }
  }
}

TEST_CASE("max-plus e_k is a best sum of k entries along injective patterns") {
  const DomainKind mp = DomainKind::MaxPlus;
  InstanceGenerator gen(mp, 46);
  for (int t = 0; t < 100; ++t) {
    const int n = gen.uniform(2, 3);
    const Endomorphism f = gen.endomorphism(n);
    const EigenData d = eigen_data(f);
    // Over all k-subsets S of columns and injective row choices r: S -> [n]
    // that, together with the untouched columns, hit every index once, take
    // the maximum of the entry sums, split by the parity of the resulting
    // permutation combined with k.
    for (int k = 1; k <= n; ++k) {
      Scalar best_even = Scalar::zero(mp), best_odd = Scalar::zero(mp);
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      do {
        std::vector<int> moved;
        for (int i = 0; i < n; ++i)
          if (perm[static_cast<std::size_t>(i)] != i) moved.push_back(i);
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
          if (std::popcount(s) != k) continue;
          bool covers = true;
          for (int i : moved) covers = covers && (s & (1u << i));
          if (!covers) continue;
          Scalar v = Scalar::one(mp);
          for (int i = 0; i < n; ++i)
            if (s & (1u << i)) v = v * f.entry(perm[static_cast<std::size_t>(i)], i);
          const bool odd = (oracle::inversions(perm) + k) % 2 == 1;
          if (odd) best_odd = best_odd + v;
          else best_even = best_even + v;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      REQUIRE(d.e[static_cast<std::size_t>(k)] == PairScalar{best_even, best_odd});
    }
  }
}

TEST_CASE("net eigenvalue coefficients are the characteristic polynomial") {
  InstanceGenerator gen(kInt, 47);
  for (int t = 0; t < 100; ++t) {
    const int n = gen.uniform(2, 4);
    const Endomorphism f = gen.endomorphism(n);
    const std::vector<Scalar> net = net_eigen_coefficients(eigen_data(f));
    const std::vector<Integer> cp = oracle::char_poly(oracle::integer_matrix(f));
    REQUIRE(net.size() == cp.size());
    for (std::size_t k = 0; k < cp.size(); ++k) REQUIRE(*net[k].as_integer() == cp[k]);
  }
  const std::vector<Scalar> sw = net_eigen_coefficients(eigen_data(swap2()));
  CHECK(sw == std::vector<Scalar>{I(1), I(0), I(-1)});
  CHECK_THROWS(net_eigen_coefficients(eigen_data(Endomorphism::identity(2, DomainKind::MaxPlus))));
}

TEST_CASE("check_quasi_inverse examples") {
  const MultiVector zeta = MultiVector::basis_word(2, kInt, Word::top(2));
  CHECK(check_quasi_inverse(Endomorphism::zero(2, kInt), zeta, 4).holds);
  CHECK(check_quasi_inverse(swap2(), zeta, 4).holds);
  CHECK_THROWS_AS(check_quasi_inverse(swap2(), zeta, 3), DegreeError);
}

TEST_CASE("check_prech examples") {
  const Endomorphism z = Endomorphism::zero(3, kInt);
  const MultiVector v = wedge(b(3, 1), b(3, 2));
  CHECK(check_prech(z, b(3, 0), v, 4).holds);
  CHECK(check_prech(Endomorphism::shift(3, kInt), b(3, 0), v, 4).holds);
  CHECK_THROWS(check_prech(z, wedge(b(3, 0), b(3, 1)), v, 6));
}

TEST_CASE("check_precheh examples") {
  CHECK(check_precheh(Endomorphism::zero(3, kInt)).holds);
  const PrechehResult s = check_precheh(swap2());
  CHECK(s.holds);
  CHECK(s.sum == IP(2, 2));
}

TEST_CASE("check_cayley_hamilton examples") {
  const CheckResult z = check_cayley_hamilton(Endomorphism::zero(2, kInt), Word::basis(0), Word::basis(1));
  CHECK(z.holds);
  const CheckResult s = check_cayley_hamilton(swap2(), Word::basis(0), Word::basis(1));
  CHECK(s.holds);
  CHECK(is_balanced(s.residual));
  CHECK_THROWS(check_cayley_hamilton(swap2(), Word::basis(0), Word(0)));
}

TEST_CASE("ch_corollary_residual examples") {
  CHECK(ch_corollary_residual(Endomorphism::zero(3, kInt), wedge(b(3, 0), b(3, 1))).holds);
  // Companion matrix of lambda^3 - 2 lambda^2 + 3 lambda - 5.
  const Endomorphism c(3, kInt, {I(0), I(0), I(5), I(1), I(0), I(-3), I(0), I(1), I(2)});
  const CheckResult r = ch_corollary_residual(c, wedge(b(3, 0), b(3, 1)));
  CHECK(r.holds);
  for (const auto& [w, p] : r.residual.terms()) CHECK(p.pos == p.neg);
  const std::vector<Scalar> net = net_eigen_coefficients(eigen_data(c));
  CHECK(net == std::vector<Scalar>{I(1), I(-2), I(3), I(-5)});
  CHECK_THROWS_AS(ch_corollary_residual(c, b(3, 0)), DegreeError);
}

TEST_CASE("theorem checks hold on random instances") {
  for (DomainKind kind : oracle::all_domains()) {
    CAPTURE(domain_name(kind));
    InstanceGenerator gen(kind, 48);
    for (int t = 0; t < 40; ++t) {
      const int n = gen.uniform(3, 4);
      const Endomorphism f = gen.endomorphism(n);
      const MultiVector x = gen.homogeneous(n, gen.uniform(2, n));
      REQUIRE(check_quasi_inverse(f, x, 2 * n).holds);
      const int du = gen.uniform(1, n - 2);
      const MultiVector u = gen.homogeneous(n, du);
      const MultiVector v = gen.homogeneous(n, gen.uniform(2, n - du));
      REQUIRE(check_prech(f, u, v, n + du).holds);
      REQUIRE(check_precheh(f).holds);
      for (int d = 2; d <= n; ++d) {
        const Word w = gen.word(n, d);
        REQUIRE(ch_corollary_residual(f, MultiVector::basis_word(n, kind, w)).holds);
      }
      const Word wu = gen.word(n, gen.uniform(1, n - 1));
      REQUIRE(check_cayley_hamilton(f, wu, Word(Word::top(n).mask() & ~wu.mask())).holds);
    }
  }
}

TEST_CASE("classical case: residuals cancel exactly over the integers") {
  InstanceGenerator gen(kInt, 49);
  for (int t = 0; t < 50; ++t) {
    const int n = gen.uniform(2, 4);
    const Endomorphism f = gen.endomorphism(n);
    for (int d = 1; d < n; ++d) {
      for (Word wu : words_of_degree(n, d)) {
        const CheckResult r = check_cayley_hamilton(f, wu, Word(Word::top(n).mask() & ~wu.mask()));
        for (const auto& [w, p] : r.residual.terms()) REQUIRE(p.pos == p.neg);
      }
    }
  }
}
