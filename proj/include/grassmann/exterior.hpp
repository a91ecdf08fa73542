#pragma once

// The reduced Grassmann semialgebra over a scalar domain.
//
// Basis words b_{i_1} ^ ... ^ b_{i_k} are kept in canonical form
// (strictly increasing indices). The "negated" copy of a word is not a
// separate key: it is the neg slot of the PairScalar coefficient, so a
// degree-k component has 2*C(n,k) free coordinates.
//
// Words with a repeated index are zero (b_i ^ b_i = 0). Reordering a word
// costs one pair swap per odd permutation. The negation map exists only in
// degree >= 2; negate() enforces that.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grassmann/scalar.hpp"

namespace grassmann {

inline constexpr int kMaxRank = 32;

// Strictly increasing index tuple, stored as a bitmask.
class Word {
 public:
  constexpr Word() = default;
  constexpr explicit Word(std::uint32_t mask) : mask_(mask) {}

  static constexpr Word basis(int i) { return Word(std::uint32_t{1} << i); }
  // Indices must already be strictly increasing and within [0, n).
  static Word from_sorted(std::span<const int> indices, int n);
  // b_0 ^ ... ^ b_{n-1}
  static constexpr Word top(int n) {
    return Word(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
  constexpr bool empty() const { return mask_ == 0; }
  std::vector<int> indices() const;

  // "b0^b2"; the empty word prints as "1".
  std::string to_string() const;

  friend constexpr bool operator==(Word, Word) = default;

 private:
  std::uint32_t mask_ = 0;
};

// Degree first, then lexicographic on the sorted index tuples.
struct WordOrder {
  constexpr bool operator()(Word a, Word b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const std::uint32_t diff = a.mask() ^ b.mask();
    if (diff == 0) return false;
    return (a.mask() & (diff & (~diff + 1))) != 0;
  }
};

enum class Parity : std::uint8_t { Even, Odd };

struct OrientedWord {
  Word word;
  Parity parity;
  friend bool operator==(const OrientedWord&, const OrientedWord&) = default;
};

// Sorts an index sequence. Returns nullopt (the zero word) when an index
// repeats; otherwise the sorted word and the parity of the sorting
// permutation. Throws DegreeError for indices outside [0, n).
std::optional<OrientedWord> sort_word(std::span<const int> indices, int n);

// Parity of the permutation that sorts the concatenation a ++ b, where a and
// b are disjoint canonical words.
Parity concat_parity(Word a, Word b);

// Element of the reduced Grassmann semialgebra of rank n.
class MultiVector {
 public:
  using Terms = std::map<Word, PairScalar, WordOrder>;

  MultiVector(int n, DomainKind kind);  // zero

  static MultiVector scalar(int n, const Scalar& s);
  static MultiVector basis_vector(int n, DomainKind kind, int i);
  // Coefficient (1, 0) on the given word.
  static MultiVector basis_word(int n, DomainKind kind, Word w);
  // Degree-1 element sum_i coords[i] b_i.
  static MultiVector vector(int n, std::span<const Scalar> coords);
  // Validating constructor for external input: words within rank, domain
  // consistent, no nonzero neg slot below degree 2. Repeated words add up.
  static MultiVector from_terms(int n, DomainKind kind, const std::vector<std::pair<Word, PairScalar>>& terms);

  int rank() const { return n_; }
  DomainKind kind() const { return kind_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PairScalar coefficient(Word w) const;

  // Common degree of all terms; nullopt when zero or of mixed degree.
  std::optional<int> homogeneous_degree() const;
  // True when every term has degree d (vacuously true for zero).
  bool has_pure_degree(int d) const;
  int min_degree() const;
  int max_degree() const;

  // Accumulates c onto word w; zero pairs are pruned.
  void add_term(Word w, const PairScalar& c);

  // Multiplies every coefficient by c (twist product). A nonzero neg part is
  // refused on terms of degree < 2, where no negation exists.
  MultiVector scaled(const PairScalar& c) const;
  MultiVector scaled(const Scalar& s) const { return scaled(PairScalar::embed(s)); }

  // Terms in WordOrder, "0" for the zero element. Coefficient (1,0) is
  // omitted, (0,1) prints as "(-)word".
  std::string to_string() const;

  MultiVector& operator+=(const MultiVector& other);

  friend bool operator==(const MultiVector& a, const MultiVector& b);

 private:
  int n_;
  DomainKind kind_;
  Terms terms_;
};

// Termwise pair addition.
MultiVector mv_add(const MultiVector& x, const MultiVector& y);
inline MultiVector operator+(const MultiVector& x, const MultiVector& y) { return mv_add(x, y); }

MultiVector wedge(const MultiVector& x, const MultiVector& y);

// Swaps every coefficient. Throws NegationUndefined when x has a term of
// degree 0 or 1.
MultiVector negate(const MultiVector& x);

// Whether y surpasses x: every coefficient of y equals the matching one of
// x plus a diagonal quasi-zero.
bool mv_surpasses(const MultiVector& x, const MultiVector& y);

// Every coefficient is a diagonal pair, i.e. x surpasses zero.
bool is_balanced(const MultiVector& x);

// For u of pure degree k with 2 <= k < n and not balanced, searches all
// complementary basis words v (degree n-k) for one with u ^ v unbalanced.
bool nondegeneracy_check(const MultiVector& u);

// All canonical words of the given degree in rank n, in WordOrder.
std::vector<Word> words_of_degree(int n, int degree);

void require_compatible(const MultiVector& a, const MultiVector& b);

}  // namespace grassmann
