#pragma once

#include <string>
#include <vector>

#include "bdeform/rational.hpp"

namespace bdeform {

/// Dense polynomial over Q in one variable, lowest degree first, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational c);  // NOLINT(google-explicit-constructor)
  UPoly(long long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);
  /// c * x^e.
  static UPoly monomial(unsigned e, Rational c = 1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int e) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;
  bool is_monomial() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& c);
  friend UPoly operator-(const UPoly& a, const UPoly& c);
  friend UPoly operator*(const UPoly& a, const UPoly& c);
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const Rational& r) const;
  UPoly pow(unsigned e) const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static void divmod(const UPoly& a, const UPoly& d, UPoly& quot, UPoly& rem);
  /// Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly c);
  UPoly monic() const;

  Rational eval(const Rational& x) const;
  /// p(x + shift).
  UPoly shifted(const Rational& shift) const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Rational function num/den over Q with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(UPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(long long c) : RatFunc(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& c);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& c);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& c);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& c);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  Rational eval(const Rational& x) const;
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

}  // namespace bdeform
