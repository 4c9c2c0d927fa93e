#pragma once

#include <vector>

#include "bdeform/constraints.hpp"

namespace bdeform {

/// Truncated series in t with polynomial coefficients; coeffs[n] is the t^n part.
using Series = std::vector<PPoly>;

/// Partition function of a model to order N: coeffs[0] = 1 and coeffs[n] is
/// homogeneous of degree n.
struct TauSeries {
  Model model;
  Series coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Connected counterpart H = (1+b) log tau; coeffs[0] = 0.
struct HSeries {
  Series coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Integrates n tau_n = sum_m q_m (sum_i p_i M^(k,m)_i) tau_{n-m}.
TauSeries tau_evolve(const Model& model, int order);

/// Asserts [t^n] L_i tau = 0 for i <= i_max and n <= tau.order(), after
/// checking each contribution to [t^n] L_i tau is homogeneous of degree n - i.
Report check_constraints(const TauSeries& tau, int i_max, const ResultSink& sink = {});

HSeries h_series(const TauSeries& tau);
/// exp(H/(1+b)), the inverse of h_series.
Series exp_series(const HSeries& h);

/// Checks i dH/dp_i = sum_m q_m t^m [y_i] (Y_+ prod_l (Lambda_Y + u_l + W))^m y_0
/// through t^N for i <= i_max, where W feeds the connected series back into the
/// catalytic variables: (W V)_m = sum_{1<=a<=m} (a dH/dp_a) V_{m-a}.
Report check_rooted_fixed_point(const TauSeries& tau, int i_max, const ResultSink& sink = {});

/// Largest (1+b) exponent among the coefficients of p.
int max_denom_pow(const PPoly& p);

}  // namespace bdeform
