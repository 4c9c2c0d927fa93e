#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bdeform/weyl.hpp"

namespace bdeform {

/// b-deformed current J_i: p_{-i} for i < 0, (1+b) p*_i for i > 0, charge * Id
/// for i = 0, restricted to degree <= working_degree.
WeylOp current(int i, const Coeff& charge = Coeff(), int working_degree = WeylOp::kUnbounded);

/// Operator-valued vector sum_j y_j V_j; every entry is kept at one working degree.
struct YVector {
  int working_degree = 0;
  std::map<int, WeylOp> entries;

  /// Entry j, or the zero operator.
  WeylOp at(int j) const;
  bool is_zero() const { return entries.empty(); }
};

/// y_0 * c at the given working degree.
YVector seed(int working_degree, const Coeff& c);
/// (Y_+ V)_m = V_{m-1}.
YVector y_plus(const YVector& v);
/// ((Lambda_Y + shift) V)_m = sum_i J_i V_{m-i} + b m V_m + shift V_m.
YVector lambda_y(const YVector& v, const Coeff& charge, const Coeff& shift = Coeff());

/// Operator families indexed [s or m][i]; index 0 of the inner vector is unused
/// and entries past the stored range are zero at the table's working degree.
class ModeTable {
 public:
  ModeTable() = default;
  ModeTable(int working_degree, std::vector<std::vector<WeylOp>> rows)
      : wd_(working_degree), rows_(std::move(rows)) {}

  int working_degree() const { return wd_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  /// Operator at row r, mode i (zero when i is out of range or nonpositive).
  WeylOp get(int r, int i) const;
  int max_index(int r) const { return static_cast<int>(rows_.at(r).size()) - 1; }

 private:
  int wd_ = 0;
  std::vector<std::vector<WeylOp>> rows_;
};

/// A_i(s) = [y_i] Y_+ Lambda_Y^s y_0/(1+b), charge 0, rows s = 0..s_max, by
/// iterating the catalytic operators.
ModeTable a_table_catalytic(int s_max, int working_degree);
/// Same family from A_i(s+1) = sum_n J_{i-n} A_n(s) + b(i-1) A_i(s).
ModeTable a_table_recursive(int s_max, int working_degree);

/// M^(k,m)_i = [y_i] (Y_+ prod_c (Lambda_Y + u_c))^m y_0/(1+b), charge 0, rows m = 0..m_max.
ModeTable m_table_catalytic(int k, int m_max, int working_degree);
/// M^(1,m)_i from M^(1,m+1)_i = sum_n J_{i-n-1} M^(1,m)_n + b(i-1) M^(1,m)_{i-1},
/// with J_0 = u1; rows m = 0..m_max (row 0 unused).
ModeTable m1_table_recursive(int m_max, int working_degree);
/// M^(k,1)_i = sum_s e_{k-s}(u_1..u_k) A_i(s); a single row at index 1.
ModeTable m_from_a(int k, const ModeTable& a);

/// Convenience wrappers for a single operator.
WeylOp build_a(int i, int s, int working_degree);
WeylOp build_m(int k, int m, int i, int working_degree);

/// The constant by which J_0 acts in the k = 1 family.
Coeff k1_charge();

}  // namespace bdeform
