#include "grassmann/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace grassmann {

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind()) {
    throw DomainMismatch("scalar domain mismatch: " + std::string(domain_name(a.kind())) +
                         " vs " + std::string(domain_name(b.kind())));
  }
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Optional sign followed by digits.
Integer parse_integer_text(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!is_digits(body)) throw ParseError("invalid scalar literal '" + std::string(whole) + "'");
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text);
}

Rational parse_rational_text(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer_text(s, s));
  Integer p = parse_integer_text(s.substr(0, slash), s);
  Integer q = parse_integer_text(s.substr(slash + 1), s);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(p, q);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

std::string_view domain_name(DomainKind kind) {
  switch (kind) {
    case DomainKind::Integers: return "int";
    case DomainKind::Rationals: return "rat";
    case DomainKind::Naturals: return "nat";
    case DomainKind::Booleans: return "bool";
    case DomainKind::MaxPlus: return "maxplus";
  }
  return "?";
}

Scalar ScalarDomain::zero() const { return Scalar::zero(kind_); }
Scalar ScalarDomain::one() const { return Scalar::one(kind_); }
Scalar ScalarDomain::add(const Scalar& a, const Scalar& b) const { return a + b; }
Scalar ScalarDomain::mul(const Scalar& a, const Scalar& b) const { return a * b; }
bool ScalarDomain::eq(const Scalar& a, const Scalar& b) const { return a == b; }
std::string_view ScalarDomain::name() const { return domain_name(kind_); }

ScalarDomain ScalarDomain::from_name(std::string_view name) {
  struct Alias {
    std::string_view text;
    DomainKind kind;
  };
  static constexpr std::array<Alias, 15> aliases{{
      {"int", DomainKind::Integers},     {"integers", DomainKind::Integers},
      {"z", DomainKind::Integers},       {"rat", DomainKind::Rationals},
      {"rationals", DomainKind::Rationals}, {"q", DomainKind::Rationals},
      {"nat", DomainKind::Naturals},     {"naturals", DomainKind::Naturals},
      {"n", DomainKind::Naturals},       {"bool", DomainKind::Booleans},
      {"booleans", DomainKind::Booleans}, {"b", DomainKind::Booleans},
      {"maxplus", DomainKind::MaxPlus},  {"max-plus", DomainKind::MaxPlus},
      {"tropical", DomainKind::MaxPlus},
  }};
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& a : aliases) {
    if (a.text == lower) return ScalarDomain(a.kind);
  }
  throw ParseError("unknown semiring '" + std::string(name) + "'");
}

Scalar Scalar::zero(DomainKind kind) {
  switch (kind) {
    case DomainKind::Integers:
    case DomainKind::Naturals: return Scalar(kind, Integer(0));
    case DomainKind::Rationals: return Scalar(kind, Rational(0));
    case DomainKind::Booleans: return Scalar(kind, false);
    case DomainKind::MaxPlus: return Scalar(kind, Tropical::neg_inf());
  }
  throw AlgebraError("bad domain kind");
}

Scalar Scalar::one(DomainKind kind) {
  switch (kind) {
    case DomainKind::Integers:
    case DomainKind::Naturals: return Scalar(kind, Integer(1));
    case DomainKind::Rationals: return Scalar(kind, Rational(1));
    case DomainKind::Booleans: return Scalar(kind, true);
    case DomainKind::MaxPlus: return Scalar(kind, Tropical(Rational(0)));
  }
  throw AlgebraError("bad domain kind");
}

Scalar Scalar::from_integer(DomainKind kind, const Integer& value) {
  switch (kind) {
    case DomainKind::Integers: return Scalar(kind, value);
    case DomainKind::Naturals:
      if (value < 0) throw ParseError("negative value " + value.str() + " is not a natural number");
      return Scalar(kind, value);
    case DomainKind::Rationals: return Scalar(kind, Rational(value));
    case DomainKind::Booleans:
      if (value != 0 && value != 1) throw ParseError("Boolean scalar must be 0 or 1, got " + value.str());
      return Scalar(kind, value == 1);
    case DomainKind::MaxPlus: return Scalar(kind, Tropical(Rational(value)));
  }
  throw AlgebraError("bad domain kind");
}

Scalar Scalar::from_rational(DomainKind kind, const Rational& value) {
  switch (kind) {
    case DomainKind::Rationals: return Scalar(kind, value);
    case DomainKind::MaxPlus: return Scalar(kind, Tropical(value));
    default:
      if (denominator(value) != 1) {
        throw ParseError("non-integral value " + rational_to_string(value) + " in domain " +
                         std::string(domain_name(kind)));
      }
      return from_integer(kind, numerator(value));
  }
}

Scalar Scalar::from_bool(DomainKind kind, bool value) {
  if (kind != DomainKind::Booleans) {
    throw ParseError("Boolean literal in domain " + std::string(domain_name(kind)));
  }
  return Scalar(kind, value);
}

Scalar Scalar::neg_inf() { return Scalar(DomainKind::MaxPlus, Tropical::neg_inf()); }

Scalar Scalar::parse(DomainKind kind, std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  if (s == "-inf") {
    if (kind != DomainKind::MaxPlus) throw ParseError("\"-inf\" is only valid in the maxplus domain");
    return neg_inf();
  }
  if (kind == DomainKind::Booleans) {
    if (s == "true") return from_bool(kind, true);
    if (s == "false") return from_bool(kind, false);
  }
  return from_rational(kind, parse_rational_text(s));
}

bool Scalar::is_zero() const { return *this == zero(kind_); }
bool Scalar::is_one() const { return *this == one(kind_); }

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return rational_to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "1" : "0";
        } else {
          return v.is_neg_inf() ? "-inf" : rational_to_string(v.value());
        }
      },
      value_);
}

Scalar Scalar::negated() const {
  switch (kind_) {
    case DomainKind::Integers: return Scalar(kind_, Integer(-std::get<Integer>(value_)));
    case DomainKind::Rationals: return Scalar(kind_, Rational(-std::get<Rational>(value_)));
    default:
      throw UnsupportedDomain("domain " + std::string(domain_name(kind_)) + " has no additive inverse");
  }
}

std::optional<Integer> Scalar::as_integer() const {
  if (const auto* i = std::get_if<Integer>(&value_)) return *i;
  if (const auto* b = std::get_if<bool>(&value_)) return Integer(*b ? 1 : 0);
  if (const auto* r = std::get_if<Rational>(&value_)) {
    if (denominator(*r) == 1) return numerator(*r);
  }
  return std::nullopt;
}

std::optional<Rational> Scalar::as_rational() const {
  if (const auto* i = std::get_if<Integer>(&value_)) return Rational(*i);
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  if (const auto* t = std::get_if<Tropical>(&value_)) {
    if (!t->is_neg_inf()) return t->value();
  }
  return std::nullopt;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.kind_) {
    case DomainKind::Integers:
    case DomainKind::Naturals:
      return Scalar(a.kind_, Integer(std::get<Integer>(a.value_) + std::get<Integer>(b.value_)));
    case DomainKind::Rationals:
      return Scalar(a.kind_, Rational(std::get<Rational>(a.value_) + std::get<Rational>(b.value_)));
    case DomainKind::Booleans:
      return Scalar(a.kind_, std::get<bool>(a.value_) || std::get<bool>(b.value_));
    case DomainKind::MaxPlus: {
      const auto& x = std::get<Tropical>(a.value_);
      const auto& y = std::get<Tropical>(b.value_);
      return Scalar(a.kind_, x < y ? y : x);
    }
  }
  throw AlgebraError("bad domain kind");
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.kind_) {
    case DomainKind::Integers:
    case DomainKind::Naturals:
      return Scalar(a.kind_, Integer(std::get<Integer>(a.value_) * std::get<Integer>(b.value_)));
    case DomainKind::Rationals:
      return Scalar(a.kind_, Rational(std::get<Rational>(a.value_) * std::get<Rational>(b.value_)));
    case DomainKind::Booleans:
      return Scalar(a.kind_, std::get<bool>(a.value_) && std::get<bool>(b.value_));
    case DomainKind::MaxPlus: {
      const auto& x = std::get<Tropical>(a.value_);
      const auto& y = std::get<Tropical>(b.value_);
      if (x.is_neg_inf() || y.is_neg_inf()) return Scalar(a.kind_, Tropical::neg_inf());
      return Scalar(a.kind_, Tropical(Rational(x.value() + y.value())));
    }
  }
  throw AlgebraError("bad domain kind");
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a.value_ == b.value_;
}

PairScalar PairScalar::zero(DomainKind kind) { return {Scalar::zero(kind), Scalar::zero(kind)}; }
PairScalar PairScalar::one(DomainKind kind) { return {Scalar::one(kind), Scalar::zero(kind)}; }
PairScalar PairScalar::embed(const Scalar& s) { return {s, Scalar::zero(s.kind())}; }

std::string PairScalar::to_string() const { return "(" + pos.to_string() + "," + neg.to_string() + ")"; }

PairScalar operator+(const PairScalar& x, const PairScalar& y) { return {x.pos + y.pos, x.neg + y.neg}; }

PairScalar pair_mul(const PairScalar& x, const PairScalar& y) {
  return {x.pos * y.pos + x.neg * y.neg, x.pos * y.neg + x.neg * y.pos};
}

PairScalar pair_swap(const PairScalar& x) { return {x.neg, x.pos}; }

bool is_balanced(const PairScalar& x) { return x.pos == x.neg; }

PairScalar pair_sub_formal(const PairScalar& x) { return x + pair_swap(x); }

std::optional<Scalar> find_surpass_witness(const PairScalar& x, const PairScalar& y) {
  if (x.kind() != y.kind()) throw DomainMismatch("surpass_witness across domains");
  const DomainKind kind = x.kind();
  switch (kind) {
    case DomainKind::Integers:
    case DomainKind::Rationals:
    case DomainKind::Naturals: {
      // Cancellative: the shift is forced.
      const Rational t = *y.pos.as_rational() - *x.pos.as_rational();
      if (*y.neg.as_rational() - *x.neg.as_rational() != t) return std::nullopt;
      if (kind == DomainKind::Naturals && t < 0) return std::nullopt;
      return Scalar::from_rational(kind, t);
    }
    case DomainKind::Booleans:
    case DomainKind::MaxPlus: {
      // Idempotent: any valid t can be replaced by one of these candidates
      // (zero when y = x, otherwise the component it raised).
      for (const Scalar& t : {Scalar::zero(kind), y.pos, y.neg}) {
        if (x.pos + t == y.pos && x.neg + t == y.neg) return t;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool surpass_witness(const PairScalar& x, const PairScalar& y) {
  return find_surpass_witness(x, y).has_value();
}

}  // namespace grassmann
