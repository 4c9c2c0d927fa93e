#include "bdeform/ppoly.hpp"

#include <algorithm>

#include "bdeform/errors.hpp"

namespace bdeform {

PMonomial PMonomial::power(int i, int e) {
  if (i <= 0) throw InvalidArgument("p_" + std::to_string(i) + " does not exist");
  return from_pairs({{i, e}});
}

PMonomial PMonomial::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::map<int, int> acc;
  for (auto [i, e] : pairs) {
    if (i <= 0) throw InvalidArgument("p_" + std::to_string(i) + " does not exist");
    if (e < 0) throw InvalidArgument("negative exponent in p-monomial");
    acc[i] += e;
  }
  PMonomial m;
  for (auto [i, e] : acc) {
    if (e == 0) continue;
    if (i > kMaxIndex || e > kMaxExponent) throw BoundExceeded("p-monomial index or exponent too large");
    m.rep_.push_back(static_cast<char>(i));
    m.rep_.push_back(static_cast<char>(e));
    m.degree_ += i * e;
  }
  return m;
}

int PMonomial::exponent(int i) const {
  for (std::size_t k = 0; k < num_vars(); ++k) {
    if (index_at(k) == i) return exponent_at(k);
  }
  return 0;
}

int PMonomial::length() const {
  int n = 0;
  for (std::size_t k = 0; k < num_vars(); ++k) n += exponent_at(k);
  return n;
}

std::vector<std::pair<int, int>> PMonomial::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < num_vars(); ++k) out.emplace_back(index_at(k), exponent_at(k));
  return out;
}

PMonomial operator*(const PMonomial& a, const PMonomial& c) {
  if (a.is_one()) return c;
  if (c.is_one()) return a;
  PMonomial r;
  r.rep_.reserve(a.rep_.size() + c.rep_.size());
  std::size_t x = 0, y = 0;
  while (x < a.num_vars() || y < c.num_vars()) {
    if (y == c.num_vars() || (x < a.num_vars() && a.index_at(x) < c.index_at(y))) {
      r.rep_.append(a.rep_, 2 * x, 2);
      ++x;
    } else if (x == a.num_vars() || c.index_at(y) < a.index_at(x)) {
      r.rep_.append(c.rep_, 2 * y, 2);
      ++y;
    } else {
      int e = a.exponent_at(x) + c.exponent_at(y);
      if (e > PMonomial::kMaxExponent) throw BoundExceeded("p-monomial exponent too large");
      r.rep_.push_back(static_cast<char>(a.index_at(x)));
      r.rep_.push_back(static_cast<char>(e));
      ++x;
      ++y;
    }
  }
  r.degree_ = a.degree_ + c.degree_;
  return r;
}

bool PMonomial::divisible_by(const PMonomial& c) const {
  std::size_t x = 0;
  for (std::size_t y = 0; y < c.num_vars(); ++y) {
    while (x < num_vars() && index_at(x) < c.index_at(y)) ++x;
    if (x == num_vars() || index_at(x) != c.index_at(y) || exponent_at(x) < c.exponent_at(y)) return false;
  }
  return true;
}

PMonomial exact_quotient(const PMonomial& a, const PMonomial& c) {
  if (c.is_one()) return a;
  PMonomial r;
  std::size_t y = 0;
  for (std::size_t x = 0; x < a.num_vars(); ++x) {
    int e = a.exponent_at(x);
    if (y < c.num_vars() && c.index_at(y) == a.index_at(x)) {
      e -= c.exponent_at(y);
      ++y;
    }
    if (e > 0) {
      r.rep_.push_back(static_cast<char>(a.index_at(x)));
      r.rep_.push_back(static_cast<char>(e));
    }
  }
  r.degree_ = a.degree_ - c.degree_;
  return r;
}

std::string PMonomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (std::size_t k = 0; k < num_vars(); ++k) {
    if (k) s += '*';
    s += "p" + std::to_string(index_at(k));
    if (exponent_at(k) > 1) s += "^" + std::to_string(exponent_at(k));
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const PMonomial& m) { return os << m.to_string(); }

// ---------------------------------------------------------------------------

PPoly::PPoly(Coeff c) {
  if (!c.is_zero()) terms_.emplace(PMonomial(), std::move(c));
}

PPoly PPoly::monomial(const PMonomial& m, Coeff c) {
  PPoly r;
  if (!c.is_zero()) r.terms_.emplace(m, std::move(c));
  return r;
}

PPoly PPoly::p(int i) {
  if (i <= 0) return PPoly();
  return monomial(PMonomial::power(i));
}

int PPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool PPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

PPoly PPoly::degree_slice(int d) const {
  PPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

Coeff PPoly::coeff(const PMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff() : it->second;
}

void PPoly::add_term(const PMonomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PPoly PPoly::operator-() const {
  PPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

PPoly& PPoly::operator+=(const PPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PPoly& PPoly::operator-=(const PPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PPoly operator+(const PPoly& a, const PPoly& c) {
  PPoly r = a;
  r += c;
  return r;
}

PPoly operator-(const PPoly& a, const PPoly& c) {
  PPoly r = a;
  r -= c;
  return r;
}

PPoly operator*(const PPoly& a, const PPoly& c) {
  PPoly r;
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : c.terms_) r.add_term(m1 * m2, c1 * c2);
  }
  return r;
}

PPoly PPoly::scaled(const Coeff& c) const {
  if (c.is_zero()) return PPoly();
  PPoly r;
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

PPoly PPoly::pstar(int i) const {
  PPoly r;
  if (i <= 0) return r;
  PMonomial pi = PMonomial::power(i);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(i);
    if (e == 0) continue;
    r.add_term(exact_quotient(m, pi), c.scaled(Rational(static_cast<long long>(i) * e)));
  }
  return r;
}

PPoly PPoly::map_coeffs(const std::function<Coeff(const Coeff&)>& f) const {
  PPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

std::string PPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    std::string cs = c.to_string();
    bool compound = cs.find_first_of("+ ") != std::string::npos || cs.find('/') != std::string::npos;
    if (m.is_one()) {
      s += compound ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      s += m.to_string();
    } else {
      s += (compound ? "(" + cs + ")" : cs) + "*" + m.to_string();
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const PPoly& p) { return os << p.to_string(); }

}  // namespace bdeform
