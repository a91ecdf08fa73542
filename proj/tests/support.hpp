#pragma once

// Reference computations for tests. Nothing here calls wedge, sort_word,
// HasseSchmidt or QuasiInverse; index sequences are handled by hand.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "grassmann/grassmann.hpp"

namespace oracle {

using namespace grassmann;

inline int inversions(const std::vector<int>& seq) {
  int count = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++count;
  return count;
}

inline bool has_repeat(const std::vector<int>& seq) {
  std::vector<int> s = seq;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

// Accumulates signed products keyed by sorted index tuples.
struct PairTable {
  DomainKind kind;
  std::map<std::vector<int>, std::pair<Scalar, Scalar>> cells;

  explicit PairTable(DomainKind k) : kind(k) {}

  void add(std::vector<int> seq, const Scalar& value, bool odd) {
    if (has_repeat(seq)) return;
    if (inversions(seq) % 2) odd = !odd;
    std::sort(seq.begin(), seq.end());
    auto it = cells.try_emplace(seq, Scalar::zero(kind), Scalar::zero(kind)).first;
    if (odd) it->second.second = it->second.second + value;
    else it->second.first = it->second.first + value;
  }

  PairScalar at(const std::vector<int>& word) const {
    auto it = cells.find(word);
    if (it == cells.end()) return PairScalar::zero(kind);
    return {it->second.first, it->second.second};
  }

  bool matches(const MultiVector& x) const {
    for (const auto& [w, c] : cells) {
      PairScalar p{c.first, c.second};
      if (!(x.coefficient(Word::from_sorted(w, x.rank())) == p)) return false;
    }
    for (const auto& [w, c] : x.terms()) {
      if (!(at(w.indices()) == c)) return false;
    }
    return true;
  }
};

using Matrix = std::vector<std::vector<Scalar>>;

inline Matrix to_matrix(const Endomorphism& f) {
  Matrix m(f.rank());
  for (int i = 0; i < f.rank(); ++i)
    for (int j = 0; j < f.rank(); ++j) m[i].push_back(f.entry(i, j));
  return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b, DomainKind kind) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Scalar>(n, Scalar::zero(kind)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

inline Matrix mat_power(const Matrix& a, int p, DomainKind kind) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<Scalar>(n, Scalar::zero(kind)));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = Scalar::one(kind);
  for (int s = 0; s < p; ++s) r = mat_mul(a, r, kind);
  return r;
}

// All tuples in [0, k]^r summing to k.
inline std::vector<std::vector<int>> brute_compositions(int k, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(r), 0);
  std::function<void(int)> go = [&](int pos) {
    if (pos == r) {
      int s = 0;
      for (int x : t) s += x;
      if (s == k) out.push_back(t);
      return;
    }
    for (int v = 0; v <= k; ++v) {
      t[static_cast<std::size_t>(pos)] = v;
      go(pos + 1);
    }
  };
  go(0);
  return out;
}

// Iterates over every choice of target indices for the given positions.
inline void for_each_choice(int n, int count, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(static_cast<std::size_t>(count), 0);
  std::function<void(int)> go = [&](int pos) {
    if (pos == count) {
      fn(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[static_cast<std::size_t>(pos)] = v;
      go(pos + 1);
    }
  };
  go(0);
}

// D_k of a basis word b_{w_1} ^ ... ^ b_{w_r}: every composition of k, every
// choice of output index per slot.
inline PairTable naive_hs(const Endomorphism& f, const std::vector<int>& word, int k) {
  const DomainKind kind = f.kind();
  const Matrix m = to_matrix(f);
  PairTable out(kind);
  const int r = static_cast<int>(word.size());
  for (const auto& parts : brute_compositions(k, r)) {
    std::vector<Matrix> powers;
    for (int p : parts) powers.push_back(mat_power(m, p, kind));
    for_each_choice(f.rank(), r, [&](const std::vector<int>& rows) {
      Scalar v = Scalar::one(kind);
      for (int s = 0; s < r; ++s) v = v * powers[static_cast<std::size_t>(s)][rows[s]][word[s]];
      if (!v.is_zero()) out.add(rows, v, false);
    });
  }
  return out;
}

// z^k coefficient of the quasi-inverse on a basis word of degree >= 2:
// expand prod_s (b_{w_s} - z f b_{w_s}) slot by slot, one formal sign per f.
inline PairTable naive_quasi_inverse(const Endomorphism& f, const std::vector<int>& word, int k) {
  const DomainKind kind = f.kind();
  PairTable out(kind);
  const int r = static_cast<int>(word.size());
  for (std::uint32_t subset = 0; subset < (1u << r); ++subset) {
    if (std::popcount(subset) != k) continue;
    for_each_choice(f.rank(), k, [&](const std::vector<int>& rows) {
      std::vector<int> seq = word;
      Scalar v = Scalar::one(kind);
      int used = 0;
      for (int s = 0; s < r; ++s) {
        if (subset & (1u << s)) {
          const int row = rows[static_cast<std::size_t>(used++)];
          v = v * f.entry(row, word[s]);
          seq[s] = row;
        }
      }
      if (!v.is_zero()) out.add(seq, v, k % 2 == 1);
    });
  }
  return out;
}

// Integer determinant by cofactor expansion along the first row.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const Integer term = a[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Coefficients of det(lambda I - A), highest power first: c_k is (-1)^k times
// the sum of the principal k x k minors.
inline std::vector<Integer> char_poly(const std::vector<std::vector<Integer>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) idx.push_back(i);
    std::vector<std::vector<Integer>> sub;
    for (int r : idx) {
      std::vector<Integer> row;
      for (int q : idx) row.push_back(a[r][q]);
      sub.push_back(row);
    }
    const Integer minor = cofactor_det(sub);
    const std::size_t k = idx.size();
    c[k] += (k % 2 == 0) ? minor : Integer(-minor);
  }
  return c;
}

inline std::vector<std::vector<Integer>> integer_matrix(const Endomorphism& f) {
  std::vector<std::vector<Integer>> a(f.rank());
  for (int i = 0; i < f.rank(); ++i)
    for (int j = 0; j < f.rank(); ++j) a[i].push_back(*f.entry(i, j).as_integer());
  return a;
}

// Coefficient of z^r in exp(z / (1 - z)) as a polynomial in a single operator:
// returns c_{r,k} = C(r-1, k-1) / k!, the weight of delta^k.
inline std::vector<Rational> exp_series_weights(int r) {
  std::vector<Rational> w(static_cast<std::size_t>(r) + 1, Rational(0));
  Integer fact = 1;
  for (int k = 1; k <= r; ++k) {
    fact *= k;
    Integer binom = 1;
    for (int i = 0; i < k - 1; ++i) binom = binom * (r - 1 - i) / (i + 1);
    w[static_cast<std::size_t>(k)] = Rational(binom) / Rational(fact);
  }
  return w;
}

// Sorts by repeatedly swapping a random adjacent out-of-order pair; returns
// the number of swaps, or -1 when two equal neighbours meet.
inline int random_bubble(std::vector<int> seq, std::mt19937_64& rng) {
  int swaps = 0;
  for (;;) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] == seq[i + 1]) return -1;
      if (seq[i] > seq[i + 1]) bad.push_back(i);
    }
    if (bad.empty()) return swaps;
    const std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    std::swap(seq[i], seq[i + 1]);
    ++swaps;
  }
}

inline const std::vector<DomainKind>& all_domains() {
  static const std::vector<DomainKind> d{DomainKind::Integers, DomainKind::Rationals, DomainKind::Naturals,
                                         DomainKind::Booleans, DomainKind::MaxPlus};
  return d;
}

}  // namespace oracle
