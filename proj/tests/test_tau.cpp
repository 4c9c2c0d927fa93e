#include <doctest.h>

#include "bdeform/errors.hpp"
#include "bdeform/tau.hpp"
#include "oracles.hpp"

using namespace bdeform;

namespace {

Coeff P(const char* s) { return Coeff::parse(s); }
PPoly p(int i) { return PPoly::p(i); }

// t-coefficient of the bipartite constraint, written out term by term.
WeylOp bip_mode(int i, int d) {
  WeylOp op(d);
  auto pm = [](int k) { return PMonomial::power(k); };
  for (int l = 1; l < i - 1; ++l) op.add_term(PMonomial(), pm(l) * pm(i - 1 - l), Coeff::one_plus_b());
  for (int l = 1; l + i - 1 <= d; ++l) op.add_term(pm(l), pm(l + i - 1), 1);
  if (i >= 2) op.add_term(PMonomial(), pm(i - 1), P("b").scaled(i - 1) + P("u1 + u2"));
  if (i == 1) op.add_term(PMonomial(), PMonomial(), P("u1*u2/(1+b)"));
  return op;
}

// n tau_n = sum_i p_i M_i tau_{n-1}, evaluated with the power-rule oracle.
Series bip_series_oracle(int order) {
  Series tau{PPoly(Coeff(1))};
  for (int n = 1; n <= order; ++n) {
    PPoly acc;
    for (int i = 1; i <= n; ++i) acc += p(i) * oracle::apply(bip_mode(i, order), tau.back());
    tau.push_back(acc.scaled(Rational(1, n)));
  }
  return tau;
}

Model general_maps() { return Model(ModelTag::bip_le3, {{Var::q1, 0}, {Var::q3, 0}}); }

}  // namespace

TEST_CASE("order zero is the empty configuration") {
  for (auto name : {"bip", "threeconst", "biple3"}) {
    TauSeries tau = tau_evolve(Model::parse(name), 0);
    CHECK(tau.order() == 0);
    CHECK(tau.coeffs[0] == PPoly(Coeff(1)));
  }
  CHECK_THROWS_AS(tau_evolve(Model::parse("bip"), -1), InvalidArgument);
}

TEST_CASE("first coefficients") {
  TauSeries bip = tau_evolve(Model::parse("bip"), 2);
  CHECK(bip.coeffs[1] == p(1).scaled(P("u1*u2/(1+b)")));
  // (u1 u2 / 2(1+b)) [p1^2 (1 + u1 u2/(1+b)) + p2 (b + u1 + u2)]
  PPoly hand = (p(1) * p(1)).scaled(P("1 + u1*u2/(1+b)")) + p(2).scaled(P("b + u1 + u2"));
  CHECK(bip.coeffs[2] == hand.scaled(P("u1*u2/(2*(1+b))")));

  TauSeries le3 = tau_evolve(Model::parse("biple3"), 1);
  CHECK(le3.coeffs[1] == p(1).scaled(P("q1*u1/(1+b)")));
}

TEST_CASE("evolution agrees with the explicit bipartite operator") {
  const int order = 4;
  CHECK(tau_evolve(Model::parse("bip"), order).coeffs == bip_series_oracle(order));
}

TEST_CASE("homogeneity and extension") {
  for (auto model : {Model::parse("bip"), Model::parse("threeconst"), Model::parse("biple3"), general_maps()}) {
    TauSeries a = tau_evolve(model, 4);
    TauSeries c = tau_evolve(model, 5);
    for (int n = 0; n <= 4; ++n) {
      CHECK(a.coeffs[static_cast<std::size_t>(n)].is_homogeneous(n));
      CHECK(a.coeffs[static_cast<std::size_t>(n)] == c.coeffs[static_cast<std::size_t>(n)]);
    }
    MESSAGE(model.name(), " denominator power at t^5: ", max_denom_pow(c.coeffs[5]));
  }
}

TEST_CASE("general maps have only even orders") {
  TauSeries tau = tau_evolve(general_maps(), 5);
  CHECK(tau.coeffs[1].is_zero());
  CHECK(tau.coeffs[3].is_zero());
  CHECK(tau.coeffs[2] == ((p(1) * p(1)).scaled(P("u1*q2/(2*(1+b))")) + p(2).scaled(P("u1*q2*(b + u1)/(2*(1+b))"))));
}

TEST_CASE("constraints annihilate tau") {
  Report bip = check_constraints(tau_evolve(Model::parse("bip"), 5), 5);
  CHECK(bip.passed());
  CHECK(bip.items.size() == 30);
  Report general = check_constraints(tau_evolve(general_maps(), 6), 4);
  CHECK(general.passed());
  CHECK_THROWS_AS(check_constraints(tau_evolve(Model::parse("bip"), 2), 0), InvalidArgument);
}

TEST_CASE("a perturbed series violates the constraints") {
  TauSeries tau = tau_evolve(Model::parse("threeconst"), 3);
  tau.coeffs[2] += p(2);
  Report r = check_constraints(tau, 2);
  CHECK_FALSE(r.passed());
  // p*_2 sees the perturbation directly at t^2; L_1 only from t^3 on
  for (const auto& item : r.items) {
    if (item.keys == std::vector<std::pair<std::string, int>>{{"i", 2}, {"n", 2}}) {
      CHECK_FALSE(item.pass);
      CHECK(item.mismatch.rfind("t^2", 0) == 0);
    }
    if (item.keys == std::vector<std::pair<std::string, int>>{{"i", 1}, {"n", 2}}) CHECK(item.pass);
  }
}

TEST_CASE("connected series") {
  TauSeries tau = tau_evolve(Model::parse("bip"), 4);
  HSeries h = h_series(tau);
  CHECK(h.coeffs[0].is_zero());
  CHECK(h.coeffs[1] == p(1).scaled(P("u1*u2")));
  CHECK(exp_series(h) == tau.coeffs);
  for (int n = 1; n <= 4; ++n) CHECK(h.coeffs[static_cast<std::size_t>(n)].is_homogeneous(n));

  TauSeries bad = tau;
  bad.coeffs[0] = PPoly(Coeff(2));
  CHECK_THROWS_AS(h_series(bad), InvalidArgument);
}

TEST_CASE("rooted fixed point") {
  CHECK(check_rooted_fixed_point(tau_evolve(Model::parse("bip"), 2), 1).passed());
  CHECK(check_rooted_fixed_point(tau_evolve(Model::parse("threeconst"), 3), 3).passed());
  CHECK(check_rooted_fixed_point(tau_evolve(Model::parse("biple3"), 3), 3).passed());
  CHECK(check_rooted_fixed_point(tau_evolve(Model::parse("bip"), 0), 2).passed());

  TauSeries tau = tau_evolve(Model::parse("bip"), 3);
  tau.coeffs[3] += p(3);
  CHECK_FALSE(check_rooted_fixed_point(tau, 3).passed());
}

TEST_CASE("denominator bookkeeping") {
  CHECK(max_denom_pow(PPoly()) == 0);
  CHECK(max_denom_pow(p(1).scaled(P("1/(1+b)^3")) + p(2)) == 3);
}
