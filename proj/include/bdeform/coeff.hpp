#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bdeform/rational.hpp"

namespace bdeform {

/// Indeterminates of the coefficient ring, in monomial-order priority.
enum class Var : std::uint8_t { b = 0, u1, u2, u3, q1, q2, q3 };

inline constexpr int kNumVars = 7;
inline constexpr std::array<std::string_view, kNumVars> kVarNames = {"b", "u1", "u2", "u3", "q1", "q2", "q3"};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector over (b, u1, u2, u3, q1, q2, q3) packed one byte per
/// variable, b in the most significant byte, so that integer comparison is
/// lexicographic comparison of exponents.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial of(Var v, unsigned e = 1);

  unsigned exponent(Var v) const { return static_cast<unsigned>((bits_ >> shift(v)) & 0xff); }
  bool is_one() const { return bits_ == 0; }
  unsigned total_degree() const;
  std::uint64_t bits() const { return bits_; }

  /// The same monomial with the b exponent cleared.
  Monomial without_b() const { return Monomial(bits_ & ~(std::uint64_t{0xff} << shift(Var::b))); }
  Monomial with_exponent(Var v, unsigned e) const;

  friend Monomial operator*(Monomial a, Monomial c);
  friend auto operator<=>(Monomial a, Monomial c) = default;

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  static constexpr unsigned shift(Var v) { return 8u * (kNumVars - 1 - static_cast<unsigned>(v)); }

  std::uint64_t bits_ = 0;
};

/// Exact scalar: a polynomial over Q in b, u1..u3, q1..q3 divided by a power
/// of (1+b).
///
/// Canonical form: the numerator is not divisible by (1+b) unless the
/// denominator exponent is zero, and zero is stored as the empty numerator
/// with exponent zero. Equality of canonical forms is equality of rational
/// functions.
class Coeff {
 public:
  struct Term {
    Monomial mono;
    Rational c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Coeff() = default;
  Coeff(long long n);      // NOLINT(google-explicit-constructor)
  Coeff(Rational r);       // NOLINT(google-explicit-constructor)
  static Coeff var(Var v);
  static Coeff monomial(Monomial m, Rational c = 1);
  /// 1/(1+b)^e.
  static Coeff inv_one_plus_b(int e = 1);
  static Coeff one_plus_b();

  /// Parses the textual form produced by to_string(), and more generally
  /// any + - * / ^ expression whose divisors are rationals times powers of
  /// (1+b).
  static Coeff parse(std::string_view text);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// True if the value is a rational constant.
  bool is_constant() const;
  std::optional<Rational> constant_value() const;

  const std::vector<Term>& numerator() const { return num_; }
  int denom_pow() const { return denom_pow_; }

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& a, const Coeff& c);
  friend Coeff operator-(const Coeff& a, const Coeff& c);
  friend Coeff operator*(const Coeff& a, const Coeff& c);
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  Coeff scaled(const Rational& r) const;
  Coeff pow(unsigned e) const;
  /// Multiplicative inverse; only values r*(1+b)^k/(1+b)^e are invertible.
  Coeff inverse() const;

  /// Substitutes v := value, keeping every other variable symbolic.
  Coeff substitute(Var v, const Rational& value) const;
  Coeff substitute(const std::map<Var, Rational>& values) const;
  /// Full evaluation; every variable occurring must be assigned.
  Rational eval(const std::map<Var, Rational>& assignment) const;

  std::string to_string() const;

  /// Re-establishes the canonical form (idempotent).
  Coeff canonicalized() const;

  friend bool operator==(const Coeff& a, const Coeff& c) = default;

 private:
  Coeff(std::vector<Term> num, int denom_pow);
  static std::vector<Term> normalize_terms(std::vector<Term> terms);
  void reduce();

  std::vector<Term> num_;  // sorted by monomial, descending
  int denom_pow_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Coeff& c);

/// Elementary symmetric polynomial e_k(u1, ..., u_n) for n <= 3.
Coeff elementary_symmetric(int k, int n);

}  // namespace bdeform
