#pragma once

// Exact scalar domains (semirings) and the symmetrized pair coefficients that
// carry the negation map.
//
// A Scalar is tagged with the domain it belongs to; mixing domains in one
// operation raises DomainMismatch. Nothing in here uses floating point.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "grassmann/errors.hpp"

namespace grassmann {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class DomainKind : std::uint8_t {
  Integers,
  Rationals,
  Naturals,
  Booleans,
  MaxPlus,
};

// Element of the max-plus carrier: an exact rational, or the -inf sentinel
// that serves as the semiring zero.
class Tropical {
 public:
  Tropical() = default;  // -inf
  explicit Tropical(Rational value) : value_(std::move(value)) {}

  static Tropical neg_inf() { return Tropical(); }

  bool is_neg_inf() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const Tropical&, const Tropical&) = default;
  friend bool operator<(const Tropical& a, const Tropical& b) {
    if (a.is_neg_inf()) return !b.is_neg_inf();
    if (b.is_neg_inf()) return false;
    return a.value() < b.value();
  }

 private:
  std::optional<Rational> value_;
};

class Scalar;

// Runtime descriptor of a commutative semiring.
class ScalarDomain {
 public:
  constexpr explicit ScalarDomain(DomainKind kind) : kind_(kind) {}

  constexpr DomainKind kind() const { return kind_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  // Only Integers and Rationals have a genuine additive inverse.
  constexpr bool has_negation() const {
    return kind_ == DomainKind::Integers || kind_ == DomainKind::Rationals;
  }

  // Short name used by the CLI and JSON: int, rat, nat, bool, maxplus.
  std::string_view name() const;
  // Accepts the short names and the long ones (Integers, MaxPlus, ...).
  static ScalarDomain from_name(std::string_view name);

  friend constexpr bool operator==(ScalarDomain, ScalarDomain) = default;

 private:
  DomainKind kind_;
};

std::string_view domain_name(DomainKind kind);

class Scalar {
 public:
  using Storage = std::variant<Integer, Rational, bool, Tropical>;

  static Scalar zero(DomainKind kind);
  static Scalar one(DomainKind kind);

  // Integer-valued literal in any domain. Booleans accept 0/1, Naturals
  // reject negatives, MaxPlus takes the value as a finite tropical number.
  static Scalar from_integer(DomainKind kind, const Integer& value);
  static Scalar from_rational(DomainKind kind, const Rational& value);
  static Scalar from_bool(DomainKind kind, bool value);
  static Scalar neg_inf();  // MaxPlus only

  // Parses "7", "-3", "2/3", "true", "-inf" according to the domain.
  static Scalar parse(DomainKind kind, std::string_view text);

  DomainKind kind() const { return kind_; }
  ScalarDomain domain() const { return ScalarDomain(kind_); }
  const Storage& storage() const { return value_; }

  bool is_zero() const;
  bool is_one() const;

  // Human-readable literal, also accepted by parse().
  std::string to_string() const;

  // Additive inverse; only for domains with negation.
  Scalar negated() const;

  // Exact integer view for Integers/Naturals/Booleans; nullopt otherwise
  // (or when a rational is not integral).
  std::optional<Integer> as_integer() const;
  // Exact rational view of any non-Boolean, non -inf value.
  std::optional<Rational> as_rational() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(DomainKind kind, Storage value) : kind_(kind), value_(std::move(value)) {}

  DomainKind kind_;
  Storage value_;
};

// Symmetrized coefficient (pos, neg). Addition is componentwise and the
// product is the twist product
//   (a0, a1)(b0, b1) = (a0 b0 + a1 b1, a0 b1 + a1 b0).
// The negation map is the swap (a0, a1) -> (a1, a0).
struct PairScalar {
  Scalar pos;
  Scalar neg;

  static PairScalar zero(DomainKind kind);
  static PairScalar one(DomainKind kind);
  // (s, 0)
  static PairScalar embed(const Scalar& s);

  DomainKind kind() const { return pos.kind(); }
  bool is_zero() const { return pos.is_zero() && neg.is_zero(); }

  std::string to_string() const;

  friend bool operator==(const PairScalar&, const PairScalar&) = default;
};

PairScalar operator+(const PairScalar& x, const PairScalar& y);
PairScalar pair_mul(const PairScalar& x, const PairScalar& y);
inline PairScalar operator*(const PairScalar& x, const PairScalar& y) { return pair_mul(x, y); }
PairScalar pair_swap(const PairScalar& x);

// Quasi-zeros of the symmetrized domain are exactly the diagonal pairs.
bool is_balanced(const PairScalar& x);

// x + swap(x); always balanced.
PairScalar pair_sub_formal(const PairScalar& x);

// True iff y = x + (t, t) for some t in the carrier, i.e. y surpasses x.
bool surpass_witness(const PairScalar& x, const PairScalar& y);

// The witness itself when one exists.
std::optional<Scalar> find_surpass_witness(const PairScalar& x, const PairScalar& y);

}  // namespace grassmann
