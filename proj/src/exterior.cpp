#include "grassmann/exterior.hpp"

#include <algorithm>

namespace grassmann {

Word Word::from_sorted(std::span<const int> indices, int n) {
  std::uint32_t mask = 0;
  int previous = -1;
  for (int i : indices) {
    if (i < 0 || i >= n) throw DegreeError("basis index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    if (i <= previous) throw DegreeError("word indices must be strictly increasing");
    mask |= std::uint32_t{1} << i;
    previous = i;
  }
  return Word(mask);
}

std::vector<int> Word::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string Word::to_string() const {
  if (mask_ == 0) return "1";
  std::string out;
  for (int i : indices()) {
    if (!out.empty()) out += "^";
    out += "b" + std::to_string(i);
  }
  return out;
}

std::optional<OrientedWord> sort_word(std::span<const int> indices, int n) {
  std::uint32_t mask = 0;
  bool repeated = false;
  for (int i : indices) {
    if (i < 0 || i >= n || i >= kMaxRank) {
      throw DegreeError("basis index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    }
    if ((mask >> i) & 1U) repeated = true;
    mask |= std::uint32_t{1} << i;
  }
  if (repeated) return std::nullopt;
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[a] > indices[b]) ++inversions;
    }
  }
  return OrientedWord{Word(mask), inversions % 2 == 0 ? Parity::Even : Parity::Odd};
}

Parity concat_parity(Word a, Word b) {
  // Each index j of b must move past every index of a that exceeds it.
  int inversions = 0;
  for (std::uint32_t m = b.mask(); m != 0; m &= m - 1) {
    const int j = std::countr_zero(m);
    const std::uint32_t above = j >= 31 ? 0 : a.mask() >> (j + 1);
    inversions += std::popcount(above);
  }
  return inversions % 2 == 0 ? Parity::Even : Parity::Odd;
}

void require_compatible(const MultiVector& a, const MultiVector& b) {
  if (a.rank() != b.rank()) {
    throw DomainMismatch("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
  if (a.kind() != b.kind()) {
    throw DomainMismatch("domain mismatch: " + std::string(domain_name(a.kind())) + " vs " +
                         std::string(domain_name(b.kind())));
  }
}

MultiVector::MultiVector(int n, DomainKind kind) : n_(n), kind_(kind) {
  if (n < 0 || n > kMaxRank) throw DegreeError("rank " + std::to_string(n) + " unsupported");
}

MultiVector MultiVector::scalar(int n, const Scalar& s) {
  MultiVector out(n, s.kind());
  out.add_term(Word(), PairScalar::embed(s));
  return out;
}

MultiVector MultiVector::basis_vector(int n, DomainKind kind, int i) {
  if (i < 0 || i >= n) throw DegreeError("basis index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
  return basis_word(n, kind, Word::basis(i));
}

MultiVector MultiVector::basis_word(int n, DomainKind kind, Word w) {
  if (n < kMaxRank && (w.mask() >> n) != 0) throw DegreeError("word " + w.to_string() + " exceeds rank");
  MultiVector out(n, kind);
  out.add_term(w, PairScalar::one(kind));
  return out;
}

MultiVector MultiVector::vector(int n, std::span<const Scalar> coords) {
  if (static_cast<int>(coords.size()) != n) throw DegreeError("vector needs exactly n coordinates");
  if (coords.empty()) throw DegreeError("empty vector has no domain");
  MultiVector out(n, coords.front().kind());
  for (int i = 0; i < n; ++i) out.add_term(Word::basis(i), PairScalar::embed(coords[static_cast<std::size_t>(i)]));
  return out;
}

MultiVector MultiVector::from_terms(int n, DomainKind kind, const std::vector<std::pair<Word, PairScalar>>& terms) {
  MultiVector out(n, kind);
  for (const auto& [w, c] : terms) {
    if (n < kMaxRank && (w.mask() >> n) != 0) throw DegreeError("word " + w.to_string() + " exceeds rank");
    if (c.pos.kind() != kind || c.neg.kind() != kind) throw DomainMismatch("coefficient domain differs from multivector domain");
    if (w.degree() < 2 && !c.neg.is_zero()) {
      throw NegationUndefined("nonzero neg slot on degree-" + std::to_string(w.degree()) + " word " + w.to_string());
    }
    out.add_term(w, c);
  }
  return out;
}

PairScalar MultiVector::coefficient(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? PairScalar::zero(kind_) : it->second;
}

std::optional<int> MultiVector::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int lo = terms_.begin()->first.degree();
  const int hi = terms_.rbegin()->first.degree();
  if (lo != hi) return std::nullopt;
  return lo;
}

bool MultiVector::has_pure_degree(int d) const {
  return terms_.empty() || (min_degree() == d && max_degree() == d);
}

int MultiVector::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
int MultiVector::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

void MultiVector::add_term(Word w, const PairScalar& c) {
  if (c.kind() != kind_) throw DomainMismatch("coefficient domain differs from multivector domain");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiVector MultiVector::scaled(const PairScalar& c) const {
  if (c.kind() != kind_) throw DomainMismatch("scaling by a scalar from another domain");
  MultiVector out(n_, kind_);
  if (!c.neg.is_zero() && !terms_.empty() && min_degree() < 2) {
    throw NegationUndefined("cannot scale degree < 2 terms by a pair with nonzero neg part");
  }
  for (const auto& [w, coeff] : terms_) out.add_term(w, pair_mul(c, coeff));
  return out;
}

std::string MultiVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    const bool neg_zero = c.neg.is_zero();
    if (neg_zero && c.pos.is_one()) {
      out += w.to_string();
    } else if (neg_zero && w.empty()) {
      out += c.pos.to_string();
    } else if (neg_zero) {
      out += c.pos.to_string() + "*" + w.to_string();
    } else if (c.pos.is_zero() && c.neg.is_one()) {
      out += "(-)" + w.to_string();
    } else {
      out += c.to_string() + "*" + w.to_string();
    }
  }
  return out;
}

MultiVector& MultiVector::operator+=(const MultiVector& other) {
  require_compatible(*this, other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

bool operator==(const MultiVector& a, const MultiVector& b) {
  return a.n_ == b.n_ && a.kind_ == b.kind_ && a.terms_ == b.terms_;
}

MultiVector mv_add(const MultiVector& x, const MultiVector& y) {
  MultiVector out = x;
  out += y;
  return out;
}

MultiVector wedge(const MultiVector& x, const MultiVector& y) {
  require_compatible(x, y);
  MultiVector out(x.rank(), x.kind());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      if ((wx.mask() & wy.mask()) != 0) continue;
      PairScalar c = pair_mul(cx, cy);
      if (concat_parity(wx, wy) == Parity::Odd) c = pair_swap(c);
      out.add_term(Word(wx.mask() | wy.mask()), c);
    }
  }
  return out;
}

MultiVector negate(const MultiVector& x) {
  MultiVector out(x.rank(), x.kind());
  for (const auto& [w, c] : x.terms()) {
    if (w.degree() < 2) {
      throw NegationUndefined("negation is undefined on degree-" + std::to_string(w.degree()) + " term " + w.to_string());
    }
    out.add_term(w, pair_swap(c));
  }
  return out;
}

bool mv_surpasses(const MultiVector& x, const MultiVector& y) {
  require_compatible(x, y);
  for (const auto& [w, c] : x.terms()) {
    if (!surpass_witness(c, y.coefficient(w))) return false;
  }
  for (const auto& [w, c] : y.terms()) {
    if (x.terms().count(w) == 0 && !surpass_witness(PairScalar::zero(x.kind()), c)) return false;
  }
  return true;
}

bool is_balanced(const MultiVector& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return is_balanced(t.second); });
}

std::vector<Word> words_of_degree(int n, int degree) {
  std::vector<Word> out;
  if (degree < 0 || degree > n) return out;
  if (n > 24) throw DegreeError("word enumeration limited to rank 24");
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (std::popcount(m) == degree) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end(), WordOrder{});
  return out;
}

bool nondegeneracy_check(const MultiVector& u) {
  const int n = u.rank();
  const auto k = u.homogeneous_degree();
  if (!k) throw DegreeError("nondegeneracy check needs a nonzero element of pure degree");
  if (*k < 2 || *k >= n) {
    throw DegreeError("nondegeneracy check needs 2 <= degree < n, got degree " + std::to_string(*k));
  }
  if (is_balanced(u)) throw DegreeError("nondegeneracy check needs an unbalanced element");
  for (Word w : words_of_degree(n, n - *k)) {
    if (!is_balanced(wedge(u, MultiVector::basis_word(n, u.kind(), w)))) return true;
  }
  return false;
}

}  // namespace grassmann
