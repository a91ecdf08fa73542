#include "grassmann/verification.hpp"

#include <algorithm>

namespace grassmann {

namespace {

Json make_report(Theorem theorem, Json instance, bool holds, const MultiVector& residual, int trunc,
                 std::uint64_t seed) {
  return {{"theorem", std::string(theorem_name(theorem))},
          {"instance", std::move(instance)},
          {"holds", holds},
          {"residual", multivector_to_json(residual)},
          {"trunc", trunc},
          {"seed", seed}};
}

std::string summary_line(Theorem theorem, const Json& instance, bool holds, const std::string& detail) {
  std::string out(theorem_name(theorem));
  if (instance.contains("trial")) out += " trial " + instance["trial"].dump();
  out += holds ? ": holds" : ": FAILS";
  if (!holds && !detail.empty()) out += " (" + detail + ")";
  return out;
}

TrialResult finish(Theorem theorem, Json instance, bool holds, const MultiVector& residual, const std::string& detail,
                   int trunc, std::uint64_t seed) {
  std::string summary = summary_line(theorem, instance, holds, detail);
  return {holds, std::move(summary), make_report(theorem, std::move(instance), holds, residual, trunc, seed)};
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Leibniz: return "leibniz";
    case Theorem::QuasiInverse: return "quasi-inverse";
    case Theorem::Prech: return "prech";
    case Theorem::CayleyHamilton: return "cayley-hamilton";
  }
  return "?";
}

TrialResult verify_leibniz(const Endomorphism& f, const MultiVector& u, const MultiVector& v, int trunc,
                           std::uint64_t seed, Json instance) {
  instance["endomorphism"] = endomorphism_to_json(f);
  instance["u"] = multivector_to_json(u);
  instance["v"] = multivector_to_json(v);
  const LeibnizResult r = check_leibniz(f, u, v, trunc);
  instance["exact"] = r.exact;
  MultiVector residual(f.rank(), f.kind());
  std::string detail;
  if (!r.exact) {
    const int k = r.failing_order;
    residual = r.rhs.coefficient(k);
    detail = "z^" + std::to_string(k) + ": D(u^v) = " + r.lhs.coefficient(k).to_string() +
             ", sum D_i u ^ D_j v = " + r.rhs.coefficient(k).to_string();
  }
  return finish(Theorem::Leibniz, std::move(instance), r.surpasses, residual, detail, trunc, seed);
}

TrialResult verify_quasi_inverse(const Endomorphism& f, const MultiVector& x, int trunc, std::uint64_t seed,
                                 Json instance) {
  instance["endomorphism"] = endomorphism_to_json(f);
  instance["x"] = multivector_to_json(x);
  const CheckResult r = check_quasi_inverse(f, x, trunc);
  return finish(Theorem::QuasiInverse, std::move(instance), r.holds, r.residual, r.detail, trunc, seed);
}

TrialResult verify_prech(const Endomorphism& f, const MultiVector& u, const MultiVector& v, int trunc,
                         std::uint64_t seed, Json instance) {
  instance["endomorphism"] = endomorphism_to_json(f);
  instance["u"] = multivector_to_json(u);
  instance["v"] = multivector_to_json(v);
  const CheckResult r = check_prech(f, u, v, trunc);
  return finish(Theorem::Prech, std::move(instance), r.holds, r.residual, r.detail, trunc, seed);
}

TrialResult verify_cayley_hamilton(const Endomorphism& f, int trunc, std::uint64_t seed, Json instance) {
  const int n = f.rank();
  const DomainKind kind = f.kind();
  instance["endomorphism"] = endomorphism_to_json(f);
  const EigenData data = eigen_data(f);
  instance["eigen"] = eigen_data_to_json(data);

  const PrechehResult pre = check_precheh(data);
  instance["precheh_sum"] = pair_to_json(pre.sum);
  if (!pre.holds) {
    MultiVector residual(n, kind);
    residual.add_term(Word::top(n), pre.sum);
    return finish(Theorem::CayleyHamilton, std::move(instance), false, residual,
                  "sum e_i h_{n-i} = " + pre.sum.to_string() + " is not a quasi-zero", trunc, seed);
  }

  HasseSchmidt d(f);
  MultiVector top_residual(n, kind);
  int splits = 0;
  for (int du = n; du >= 1; --du) {
    for (Word wu : words_of_degree(n, du)) {
      for (Word wv : words_of_degree(n, n - du)) {
        const MultiVector u = MultiVector::basis_word(n, kind, wu);
        const MultiVector v = MultiVector::basis_word(n, kind, wv);
        CheckResult r = check_cayley_hamilton(data, d, u, v);
        ++splits;
        if (!r.holds) {
          instance["u"] = wu.indices();
          instance["v"] = wv.indices();
          return finish(Theorem::CayleyHamilton, std::move(instance), false, r.residual, r.detail, trunc, seed);
        }
        if (du == n) top_residual = std::move(r.residual);
      }
    }
  }
  instance["splits"] = splits;

  // Corollary form on words of degree >= 2.
  for (int du = 2; du <= n; ++du) {
    for (Word wu : words_of_degree(n, du)) {
      const MultiVector u = MultiVector::basis_word(n, kind, wu);
      MultiVector residual(n, kind);
      for (int k = 0; k <= n; ++k) {
        const MultiVector term = d.coefficient(n - k, u);
        residual += term.scaled(data.e[static_cast<std::size_t>(k)].pos);
        residual += negate(term.scaled(data.e[static_cast<std::size_t>(k)].neg));
      }
      if (!is_balanced(residual)) {
        instance["u"] = wu.indices();
        return finish(Theorem::CayleyHamilton, std::move(instance), false, residual,
                      "corollary residual is not a quasi-zero", trunc, seed);
      }
    }
  }
  return finish(Theorem::CayleyHamilton, std::move(instance), true, top_residual, {}, trunc, seed);
}

TrialResult random_trial(Theorem theorem, DomainKind kind, int n, int trunc, std::uint64_t run_seed,
                         std::size_t index, std::uint64_t seed) {
  InstanceGenerator gen(kind, seed);
  Json instance = {{"trial", index}, {"trial_seed", seed}};
  const Endomorphism f = gen.endomorphism(n);
  switch (theorem) {
    case Theorem::Leibniz: {
      const int du = gen.uniform(1, n - 1);
      const int dv = gen.uniform(1, n - du);
      const MultiVector u = gen.homogeneous(n, du);
      const MultiVector v = gen.homogeneous(n, dv);
      return verify_leibniz(f, u, v, trunc, run_seed, std::move(instance));
    }
    case Theorem::QuasiInverse: {
      const int dx = gen.uniform(2, n);
      const MultiVector x = gen.homogeneous(n, dx);
      return verify_quasi_inverse(f, x, std::max(trunc, dx + n), run_seed, std::move(instance));
    }
    case Theorem::Prech: {
      if (n < 3) throw DegreeError("prech instances need n >= 3");
      const int du = gen.uniform(1, n - 2);
      const int dv = gen.uniform(2, n - du);
      const MultiVector u = gen.homogeneous(n, du);
      const MultiVector v = gen.homogeneous(n, dv);
      return verify_prech(f, u, v, std::max(trunc, n + du), run_seed, std::move(instance));
    }
    case Theorem::CayleyHamilton: return verify_cayley_hamilton(f, trunc, run_seed, std::move(instance));
  }
  throw AlgebraError("unknown theorem");
}

std::vector<TrialResult> fixed_matrix_suite(Theorem theorem, const Endomorphism& f, int trunc, std::uint64_t seed) {
  const int n = f.rank();
  const DomainKind kind = f.kind();
  std::vector<TrialResult> out;
  auto basis = [&](Word w) { return MultiVector::basis_word(n, kind, w); };
  std::size_t index = 0;
  switch (theorem) {
    case Theorem::Leibniz:
      for (int du = 1; du < n; ++du) {
        for (int dv = 1; du + dv <= n; ++dv) {
          for (Word wu : words_of_degree(n, du)) {
            for (Word wv : words_of_degree(n, dv)) {
              out.push_back(verify_leibniz(f, basis(wu), basis(wv), trunc, seed, {{"trial", index++}}));
            }
          }
        }
      }
      break;
    case Theorem::QuasiInverse:
      for (int d = 2; d <= n; ++d) {
        for (Word w : words_of_degree(n, d)) {
          out.push_back(verify_quasi_inverse(f, basis(w), std::max(trunc, d + n), seed, {{"trial", index++}}));
        }
      }
      break;
    case Theorem::Prech:
      for (int du = 1; du + 2 <= n; ++du) {
        for (int dv = 2; du + dv <= n; ++dv) {
          for (Word wu : words_of_degree(n, du)) {
            for (Word wv : words_of_degree(n, dv)) {
              out.push_back(verify_prech(f, basis(wu), basis(wv), std::max(trunc, n + du), seed, {{"trial", index++}}));
            }
          }
        }
      }
      break;
    case Theorem::CayleyHamilton: out.push_back(verify_cayley_hamilton(f, trunc, seed, {{"trial", index++}})); break;
  }
  return out;
}

}  // namespace grassmann
