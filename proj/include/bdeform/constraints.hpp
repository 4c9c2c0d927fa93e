#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdeform/currents.hpp"
#include "bdeform/report.hpp"

namespace bdeform {

enum class ModelTag { bip, three_const, bip_le3 };

/// One of the three constellation models, optionally with some parameters
/// fixed to rational values (e.g. q1 = q3 = 0 for general maps).
class Model {
 public:
  explicit Model(ModelTag tag, std::map<Var, Rational> fixed = {});
  /// "bip", "threeconst" or "biple3".
  static Model parse(std::string_view name);

  ModelTag tag() const { return tag_; }
  int k() const;
  int r() const;
  std::string name() const;
  const std::map<Var, Rational>& fixed() const { return fixed_; }

  /// Vertex weight q_m: delta_{m,1} for the constellation models, the
  /// (possibly specialized) variable q_m for bip_le3.
  Coeff q(int m) const;
  Coeff specialize(const Coeff& c) const;

 private:
  ModelTag tag_;
  std::map<Var, Rational> fixed_;
};

/// Finite sum over t-powers of operators sharing one working degree.
class TGradedOp {
 public:
  explicit TGradedOp(int working_degree) : wd_(working_degree) {}

  int working_degree() const { return wd_; }
  const std::map<int, WeylOp>& pieces() const { return pieces_; }
  WeylOp piece(int t_power) const;
  bool is_zero() const { return pieces_.empty(); }

  void add(int t_power, const WeylOp& op);
  void add(const TGradedOp& o, int t_shift = 0, const Coeff& c = 1);
  TGradedOp truncated(int d) const;
  TGradedOp map_coeffs(const std::function<Coeff(const Coeff&)>& f) const;

  std::string to_string() const;

 private:
  int wd_;
  std::map<int, WeylOp> pieces_;
};

TGradedOp commutator_at(const TGradedOp& a, const TGradedOp& c, int d);
/// left o x at degree d, every t-power shifted by t_shift.
TGradedOp compose_at(const WeylOp& left, const TGradedOp& x, int d, int t_shift = 0);
std::optional<std::string> first_difference(const TGradedOp& a, const TGradedOp& c, int d);

/// Mode operators and constraints of a model, materialized once at a working degree.
class ConstraintFamily {
 public:
  ConstraintFamily(Model model, int working_degree);

  const Model& model() const { return model_; }
  int working_degree() const { return wd_; }
  /// M^(k,m)_i for the model's k (without q_m).
  WeylOp mode(int m, int i) const;
  /// L_i = -p*_i + sum_m q_m t^m M^(k,m)_i.
  TGradedOp constraint(int i) const;
  /// Largest l for which L_l can act nontrivially on degree <= d.
  int max_constraint_index(int d) const { return d + model_.r(); }

 private:
  Model model_;
  int wd_;
  ModeTable modes_;
};

/// L_i at working degree d.
TGradedOp build_l(const Model& model, int i, int working_degree);

/// Structure operators D_{ij,l}(s) (charge 0) and D~_{ij,l}(m) (charge u).
WeylOp build_d(int s, int i, int j, int l, int working_degree = WeylOp::kUnbounded);
WeylOp build_dtilde(int m, int i, int j, int l, int working_degree = WeylOp::kUnbounded);

struct VerifyOptions {
  /// Specialize b to this value on both sides before comparing.
  std::optional<Rational> b_eval;
  ResultSink sink;
};

/// Commutation theorem of the model for 1 <= i, j <= i_max at degree d. Each
/// pair is checked against the explicit grouped right-hand side, and the
/// structure-operator form t sum_l D_{ij,l} L_l is checked as a second item.
Report verify_theorem(const Model& model, int i_max, int d, const VerifyOptions& opts = {});

enum class SimplifiedProp { dstruct, mixed, pstar, final };
std::optional<SimplifiedProp> parse_prop(std::string_view s);
std::string prop_name(SimplifiedProp p);

/// Which operator family the simplified relations are checked on.
enum class ModeFamily { a, m1 };

/// Relations among the A_i(s) (s <= 3) or M^(1,m)_i (m <= 3) and their
/// structure operators, for 1 <= i, j <= i_max at degree d.
Report verify_simplified(ModeFamily family, SimplifiedProp prop, int i_max, int d, const VerifyOptions& opts = {});

}  // namespace bdeform
