#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "bdeform/ppoly.hpp"

namespace bdeform {

/// Normal-ordered differential operator sum c * p^alpha (p*)^beta, where
/// p*_i = i d/dp_i, known exactly on polynomials of degree <= working_degree.
///
/// Terms whose annihilation degree exceeds the working degree are never
/// stored: they act as zero on every admissible input, which also makes the
/// normal form unique for a given working degree.
class WeylOp {
 public:
  struct Key {
    PMonomial create;
    PMonomial annihilate;
    friend bool operator==(const Key&, const Key&) = default;
    friend std::strong_ordering operator<=>(const Key& a, const Key& c) {
      if (auto o = a.create <=> c.create; o != 0) return o;
      return a.annihilate <=> c.annihilate;
    }
  };
  using Terms = std::map<Key, Coeff>;

  /// Operators with finitely many terms are exact on every degree.
  static constexpr int kUnbounded = 1 << 28;

  explicit WeylOp(int working_degree = kUnbounded) : wd_(working_degree) {}

  static WeylOp scalar(const Coeff& c, int working_degree = kUnbounded);
  static WeylOp identity() { return scalar(1); }
  /// Multiplication by p_i; zero for i <= 0.
  static WeylOp p(int i);
  /// p*_i = i d/dp_i; zero for i <= 0.
  static WeylOp pstar(int i);
  static WeylOp term(const PMonomial& create, const PMonomial& annihilate, const Coeff& c,
                     int working_degree = kUnbounded);

  int working_degree() const { return wd_; }
  bool bounded() const { return wd_ < kUnbounded; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * p^create (p*)^annihilate unless it is invisible at this working degree.
  void add_term(const PMonomial& create, const PMonomial& annihilate, const Coeff& c);
  void add_term(const Key& k, const Coeff& c) { add_term(k.create, k.annihilate, c); }
  Coeff coeff(const PMonomial& create, const PMonomial& annihilate) const;

  /// Largest degree increase max(0, deg alpha - deg beta) over the terms.
  int jump() const;
  /// Common value of deg alpha - deg beta, if the operator is nonzero and homogeneous.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous(int g) const;

  /// Restriction to inputs of degree <= d (d may not exceed the working degree).
  WeylOp truncated(int d) const;

  WeylOp operator-() const;
  friend WeylOp operator+(const WeylOp& a, const WeylOp& c);
  friend WeylOp operator-(const WeylOp& a, const WeylOp& c);
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp scaled(const Coeff& c) const;
  WeylOp map_coeffs(const std::function<Coeff(const Coeff&)>& f) const;

  std::string to_string() const;

  /// Structural equality, working degree included.
  friend bool operator==(const WeylOp& a, const WeylOp& c) = default;

 private:
  Terms terms_;
  int wd_;
};

/// Application to a polynomial of degree <= O.working_degree().
PPoly apply(const WeylOp& op, const PPoly& f);

/// Normal-ordered product O1 O2 exact on degree <= d. Requires
/// d <= O2.working_degree() and d + O2.jump() <= O1.working_degree().
WeylOp compose_at(const WeylOp& o1, const WeylOp& o2, int d);
/// Product at the largest degree both factors allow: O2's working degree when
/// it is bounded, otherwise O1's working degree minus O2's jump.
WeylOp compose(const WeylOp& o1, const WeylOp& o2);

WeylOp commutator_at(const WeylOp& a, const WeylOp& c, int d);
WeylOp commutator(const WeylOp& a, const WeylOp& c);

/// Largest degree at which compose(o1, o2) is exact.
int compose_budget(const WeylOp& o1, const WeylOp& o2);
int commutator_budget(const WeylOp& a, const WeylOp& c);

/// Equality of the actions on all polynomials of degree <= d.
bool op_equal(const WeylOp& a, const WeylOp& c, int d);
/// Human-readable description of the first term where the truncations differ.
std::optional<std::string> first_difference(const WeylOp& a, const WeylOp& c, int d);

std::string term_to_string(const WeylOp::Key& k);

std::ostream& operator<<(std::ostream& os, const WeylOp& op);

}  // namespace bdeform
