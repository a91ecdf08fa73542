#include "grassmann/random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace grassmann {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

int InstanceGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Scalar InstanceGenerator::scalar() {
  switch (kind_) {
    case DomainKind::Integers:
    case DomainKind::Rationals: return Scalar::from_integer(kind_, uniform(-3, 3));
    case DomainKind::Naturals:
    case DomainKind::Booleans: return Scalar::from_integer(kind_, uniform(0, 1));
    case DomainKind::MaxPlus:
      if (uniform(0, 7) == 0) return Scalar::neg_inf();
      return Scalar::from_integer(kind_, uniform(-5, 5));
  }
  return Scalar::zero(kind_);
}

Scalar InstanceGenerator::nonzero_scalar() {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
  return Scalar::one(kind_);
}

Endomorphism InstanceGenerator::endomorphism(int n) {
  std::vector<Scalar> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n * n; ++i) entries.push_back(scalar());
  return Endomorphism(n, kind_, std::move(entries));
}

Word InstanceGenerator::word(int n, int degree) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), engine_);
  std::uint32_t mask = 0;
  for (int i = 0; i < degree; ++i) mask |= std::uint32_t{1} << idx[static_cast<std::size_t>(i)];
  return Word(mask);
}

MultiVector InstanceGenerator::homogeneous(int n, int degree, int max_terms) {
  MultiVector out(n, kind_);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const Word w = word(n, degree);
    PairScalar c = PairScalar::embed(nonzero_scalar());
    if (degree >= 2) c.neg = scalar();
    out.add_term(w, c);
  }
  if (out.is_zero()) out.add_term(word(n, degree), PairScalar::one(kind_));
  return out;
}

}  // namespace grassmann
