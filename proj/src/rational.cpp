#include "bdeform/rational.hpp"

#include <limits>
#include <stdexcept>

#include "bdeform/errors.hpp"

namespace bdeform {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(i128 x) {
  const bool neg = x < 0;
  u128 m = uabs(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1) {}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  set_big(std::move(c));
}

void Rational::set_big(mpq_class q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Rational r;
  if (n == 0) return r;
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  n /= static_cast<i128>(g);
  d /= static_cast<i128>(g);
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.set_big(mpq_class(to_mpz(n), to_mpz(d)));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw ParseError("invalid rational literal '" + s + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  return Rational(q);
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::small_integer(long long* out) const {
  if (big_ || den_ != 1) return false;
  if (out) *out = num_;
  return true;
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  return from_wide(-static_cast<i128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      long long s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      long long p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero("rational division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  for (unsigned k = 0; k < e; ++k) r *= *this;
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never fits in int64
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace bdeform
