#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bdeform {

/// Exact rational number.
///
/// Values that fit in a reduced int64 numerator/denominator pair stay on a
/// fast path; anything larger is promoted to a shared, immutable GMP value.
/// The two representations are never both valid for the same value: a big
/// result that fits back into int64 is demoted, so equality can compare
/// representations directly.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  /// Parses "n" or "n/d" with arbitrary-size integers.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// Returns the value as mpq (always valid).
  mpq_class to_mpq() const;
  std::string to_string() const;

  /// Fits in int64 numerator with unit denominator.
  bool small_integer(long long* out) const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  Rational pow(unsigned e) const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);
  void set_big(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bdeform
