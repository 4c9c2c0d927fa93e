#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bdeform/coeff.hpp"

namespace bdeform {

/// Monomial p_1^{e_1} p_2^{e_2} ... stored as (index, exponent) byte pairs in
/// ascending index order. Ordered graded-lex: by degree, then by the pair
/// sequence.
class PMonomial {
 public:
  static constexpr int kMaxIndex = 255;
  static constexpr int kMaxExponent = 255;

  PMonomial() = default;
  /// p_i^e; the empty monomial when i <= 0 is not allowed, see PPoly::p.
  static PMonomial power(int i, int e = 1);
  static PMonomial from_pairs(const std::vector<std::pair<int, int>>& pairs);

  int degree() const { return degree_; }
  bool is_one() const { return rep_.empty(); }
  int exponent(int i) const;
  /// Number of parts of the underlying partition, i.e. total exponent.
  int length() const;
  std::vector<std::pair<int, int>> pairs() const;
  std::size_t num_vars() const { return rep_.size() / 2; }
  int index_at(std::size_t k) const { return static_cast<unsigned char>(rep_[2 * k]); }
  int exponent_at(std::size_t k) const { return static_cast<unsigned char>(rep_[2 * k + 1]); }

  friend PMonomial operator*(const PMonomial& a, const PMonomial& c);
  /// a / c, assuming c divides a.
  friend PMonomial exact_quotient(const PMonomial& a, const PMonomial& c);
  bool divisible_by(const PMonomial& c) const;

  std::string to_string() const;

  friend bool operator==(const PMonomial& a, const PMonomial& c) { return a.rep_ == c.rep_; }
  friend std::strong_ordering operator<=>(const PMonomial& a, const PMonomial& c) {
    if (auto o = a.degree_ <=> c.degree_; o != 0) return o;
    return a.rep_ <=> c.rep_;
  }

 private:
  std::string rep_;
  int degree_ = 0;
};

/// Sparse polynomial in p_1, p_2, ... with Coeff scalars.
class PPoly {
 public:
  using Terms = std::map<PMonomial, Coeff>;

  PPoly() = default;
  PPoly(Coeff c);  // NOLINT(google-explicit-constructor)
  static PPoly monomial(const PMonomial& m, Coeff c = 1);
  /// p_i; zero for i <= 0.
  static PPoly p(int i);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Maximum degree of a term; -1 for zero.
  int degree() const;
  bool is_homogeneous(int d) const;
  PPoly degree_slice(int d) const;
  Coeff coeff(const PMonomial& m) const;

  void add_term(const PMonomial& m, const Coeff& c);

  PPoly operator-() const;
  friend PPoly operator+(const PPoly& a, const PPoly& c);
  friend PPoly operator-(const PPoly& a, const PPoly& c);
  friend PPoly operator*(const PPoly& a, const PPoly& c);
  PPoly& operator+=(const PPoly& o);
  PPoly& operator-=(const PPoly& o);
  PPoly& operator*=(const PPoly& o) { return *this = *this * o; }

  PPoly scaled(const Coeff& c) const;
  /// i * d/dp_i.
  PPoly pstar(int i) const;
  PPoly map_coeffs(const std::function<Coeff(const Coeff&)>& f) const;

  std::string to_string() const;

  friend bool operator==(const PPoly& a, const PPoly& c) = default;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PMonomial& m);
std::ostream& operator<<(std::ostream& os, const PPoly& p);

}  // namespace bdeform
