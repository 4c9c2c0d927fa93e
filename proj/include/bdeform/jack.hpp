#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bdeform/tau.hpp"
#include "bdeform/univariate.hpp"

namespace bdeform {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws InvalidArgument on a nonpositive part.
  explicit Partition(std::vector<int> parts);
  /// "2,1" or "" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// Multiplicity of part i.
  int multiplicity(int i) const;
  Partition transposed() const;
  PMonomial to_monomial() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions(int n);
/// Dominance order: mu <= lambda.
bool dominated_by(const Partition& mu, const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i!.
Rational z_factor(const Partition& lambda);
/// <p_lambda, p_mu>_alpha as a polynomial in alpha.
UPoly alpha_inner(const Partition& lambda, const Partition& mu);

inline constexpr int kJackBound = 6;

/// J_lambda in the power-sum basis with coefficients in Q(alpha), normalized
/// so that the coefficient of p_1^n is 1.
struct JackPoly {
  Partition lambda;
  std::map<Partition, RatFunc> p_expansion;

  RatFunc coeff(const Partition& mu) const;
  /// Substitutes alpha = 1 + b.
  PPoly to_ppoly() const;
  std::string to_string() const;
};

/// Every J_lambda with |lambda| = n, by Gram-Schmidt on monomial symmetric
/// functions in increasing lexicographic order.
std::vector<JackPoly> jack_basis(int n, int bound = kJackBound);
JackPoly jack(const Partition& lambda, int bound = kJackBound);

/// <f, g>_alpha for two power-sum expansions.
RatFunc alpha_inner(const JackPoly& f, const JackPoly& g);
/// Expansion over monomial symmetric functions m_mu.
std::map<Partition, RatFunc> monomial_expansion(const JackPoly& j);

/// Alpha-content of the box in row r, column c (1-based).
enum class ContentConvention {
  standard,    // alpha (c - 1) - (r - 1)
  transposed,  // alpha (r - 1) - (c - 1)
};
std::string convention_name(ContentConvention c);

/// prod over boxes of prod_{l <= k} (u_l + content), with alpha = 1 + b.
Coeff content_product(const Partition& lambda, int k, ContentConvention conv = ContentConvention::standard);

/// [t^n] tau = sum_{lambda |- n} J_lambda(p) J_lambda(q) content(lambda) / j_lambda
/// with j_lambda = <J_lambda, J_lambda>_alpha and alpha = 1 + b.
TauSeries tau_jack(const Model& model, int order, ContentConvention conv = ContentConvention::standard);

/// The content convention under which tau_jack agrees with tau_evolve through
/// t^2, or nullopt when neither does.
std::optional<ContentConvention> calibrate_content(const Model& model);

}  // namespace bdeform
