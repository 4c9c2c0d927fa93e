#include "bdeform/univariate.hpp"

#include <utility>

#include "bdeform/errors.hpp"

namespace bdeform {

UPoly::UPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(unsigned e, Rational c) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(e + 1);
  v[e] = std::move(c);
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int e) const {
  if (e < 0 || e >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(e)];
}

Rational UPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

bool UPoly::is_monomial() const {
  int nonzero = 0;
  for (const auto& c : c_) nonzero += !c.is_zero();
  return nonzero == 1;
}

UPoly UPoly::operator-() const { return scaled(-1); }

UPoly operator+(const UPoly& a, const UPoly& c) {
  std::vector<Rational> v(std::max(a.c_.size(), c.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < c.c_.size(); ++i) v[i] += c.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& c) { return a + (-c); }

UPoly operator*(const UPoly& a, const UPoly& c) {
  if (a.is_zero() || c.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + c.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.c_.size(); ++j) v[i + j] += a.c_[i] * c.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& r) const {
  if (r.is_zero()) return {};
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= r;
  return UPoly(std::move(v));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly out(1);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

void UPoly::divmod(const UPoly& a, const UPoly& d, UPoly& quot, UPoly& rem) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  std::vector<Rational> q(a.c_.size() >= d.c_.size() ? a.c_.size() - d.c_.size() + 1 : 0);
  const Rational lead = d.leading();
  for (int i = static_cast<int>(r.size()) - 1; i >= d.degree(); --i) {
    if (r[static_cast<std::size_t>(i)].is_zero()) continue;
    const Rational f = r[static_cast<std::size_t>(i)] / lead;
    const int shift = i - d.degree();
    q[static_cast<std::size_t>(shift)] = f;
    for (int j = 0; j <= d.degree(); ++j) r[static_cast<std::size_t>(shift + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  quot = UPoly(std::move(q));
  rem = UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading());
}

UPoly UPoly::gcd(UPoly a, UPoly c) {
  while (!c.is_zero()) {
    UPoly q, r;
    divmod(a, c, q, r);
    a = std::move(c);
    c = std::move(r);
  }
  return a.monic();
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::shifted(const Rational& shift) const {
  const UPoly lin(std::vector<Rational>{shift, 1});
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly(*it);
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = degree(); e >= 0; --e) {
    Rational c = coeff(e);
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (e == 0) {
      s += c.to_string();
      continue;
    }
    if (!c.is_one()) s += c.to_string() + "*";
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

RatFunc::RatFunc(UPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  UPoly r;
  if (g.degree() > 0) {
    UPoly::divmod(num_, g, num_, r);
    UPoly::divmod(den_, g, den_, r);
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = Rational(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& c) {
  if (a.den_ == c.den_) return RatFunc(a.num_ + c.num_, a.den_);
  return RatFunc(a.num_ * c.den_ + c.num_ * a.den_, a.den_ * c.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& c) { return a + (-c); }

RatFunc operator*(const RatFunc& a, const RatFunc& c) {
  if (a.is_zero() || c.is_zero()) return {};
  return RatFunc(a.num_ * c.num_, a.den_ * c.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& c) {
  if (c.is_zero()) throw DivisionByZero("rational function division by zero");
  return RatFunc(a.num_ * c.den_, a.den_ * c.num_);
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace bdeform
