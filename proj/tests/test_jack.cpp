#include <doctest.h>

#include "bdeform/errors.hpp"
#include "bdeform/jack.hpp"

using namespace bdeform;

namespace {

Coeff P(const char* s) { return Coeff::parse(s); }
Partition L(std::vector<int> parts) { return Partition(std::move(parts)); }
UPoly alpha() { return UPoly::monomial(1); }

// Schur functions over power sums, s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu.
std::map<Partition, Rational> schur(const Partition& lambda) {
  using M = std::map<Partition, Rational>;
  static const std::map<Partition, M> table = {
      {L({1}), {{L({1}), 1}}},
      {L({2}), {{L({1, 1}), Rational(1, 2)}, {L({2}), Rational(1, 2)}}},
      {L({1, 1}), {{L({1, 1}), Rational(1, 2)}, {L({2}), Rational(-1, 2)}}},
      {L({3}), {{L({1, 1, 1}), Rational(1, 6)}, {L({2, 1}), Rational(1, 2)}, {L({3}), Rational(1, 3)}}},
      {L({2, 1}), {{L({1, 1, 1}), Rational(1, 3)}, {L({3}), Rational(-1, 3)}}},
      {L({1, 1, 1}), {{L({1, 1, 1}), Rational(1, 6)}, {L({2, 1}), Rational(-1, 2)}, {L({3}), Rational(1, 3)}}},
      {L({4}),
       {{L({1, 1, 1, 1}), Rational(1, 24)},
        {L({2, 1, 1}), Rational(1, 4)},
        {L({2, 2}), Rational(1, 8)},
        {L({3, 1}), Rational(1, 3)},
        {L({4}), Rational(1, 4)}}},
      {L({3, 1}),
       {{L({1, 1, 1, 1}), Rational(1, 8)}, {L({2, 1, 1}), Rational(1, 4)}, {L({2, 2}), Rational(-1, 8)}, {L({4}), Rational(-1, 4)}}},
      {L({2, 2}), {{L({1, 1, 1, 1}), Rational(1, 12)}, {L({2, 2}), Rational(1, 4)}, {L({3, 1}), Rational(-1, 3)}}},
      {L({2, 1, 1}),
       {{L({1, 1, 1, 1}), Rational(1, 8)}, {L({2, 1, 1}), Rational(-1, 4)}, {L({2, 2}), Rational(-1, 8)}, {L({4}), Rational(1, 4)}}},
      {L({1, 1, 1, 1}),
       {{L({1, 1, 1, 1}), Rational(1, 24)},
        {L({2, 1, 1}), Rational(-1, 4)},
        {L({2, 2}), Rational(1, 8)},
        {L({3, 1}), Rational(1, 3)},
        {L({4}), Rational(-1, 4)}}},
  };
  return table.at(lambda);
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(0) == std::vector<Partition>{Partition()});
  CHECK(partitions(3) == std::vector<Partition>{L({3}), L({2, 1}), L({1, 1, 1})});
  CHECK(partitions(6).size() == 11);
  CHECK(Partition::parse("1,2") == L({2, 1}));
  CHECK(Partition::parse("") == Partition());
  CHECK(L({3, 1}).transposed() == L({2, 1, 1}));
  CHECK(dominated_by(L({2, 2}), L({3, 1})));
  CHECK_FALSE(dominated_by(L({3, 1}), L({2, 2})));
  CHECK_FALSE(dominated_by(L({3, 3}), L({4, 1, 1})));
  CHECK_FALSE(dominated_by(L({4, 1, 1}), L({3, 3})));
  CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("2,x"), ParseError);
}

TEST_CASE("alpha scalar product of power sums") {
  CHECK(alpha_inner(L({2}), L({2})) == alpha().scaled(2));
  CHECK(alpha_inner(L({1, 1}), L({2})).is_zero());
  CHECK(alpha_inner(L({1, 1}), L({1, 1})) == (alpha() * alpha()).scaled(2));
  CHECK(z_factor(L({2, 2, 1})) == Rational(8));
}

TEST_CASE("low-degree Jack polynomials") {
  JackPoly j1 = jack(L({1}));
  CHECK(j1.p_expansion.size() == 1);
  CHECK(j1.coeff(L({1})) == RatFunc(1));

  JackPoly j2 = jack(L({2}));
  CHECK(j2.coeff(L({1, 1})) == RatFunc(1));
  CHECK(j2.coeff(L({2})) == RatFunc(alpha()));
  JackPoly j11 = jack(L({1, 1}));
  CHECK(j11.coeff(L({1, 1})) == RatFunc(1));
  CHECK(j11.coeff(L({2})) == RatFunc(-1));
  CHECK(alpha_inner(j2, j11).is_zero());
  CHECK(j2.to_ppoly() == PPoly::p(1) * PPoly::p(1) + PPoly::p(2).scaled(P("1 + b")));
  CHECK_THROWS_AS(jack(L({7})), BoundExceeded);
}

TEST_CASE("orthogonality and triangularity") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<JackPoly> basis = jack_basis(n);
    CHECK(basis.size() == partitions(n).size());
    for (const auto& a : basis) {
      CHECK(a.coeff(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == RatFunc(1));
      for (const auto& c : basis) {
        if (a.lambda != c.lambda) CHECK(alpha_inner(a, c).is_zero());
      }
      if (n <= 5) {
        for (const auto& [mu, coeff] : monomial_expansion(a)) CHECK(dominated_by(mu, a.lambda));
      }
    }
  }
}

TEST_CASE("alpha = 1 gives multiples of Schur functions") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& j : jack_basis(n)) {
      CAPTURE(j.lambda.to_string());
      auto s = schur(j.lambda);
      std::optional<Rational> ratio;
      for (const auto& mu : partitions(n)) {
        Rational jv = j.coeff(mu).eval(1);
        Rational sv = s.count(mu) ? s.at(mu) : Rational(0);
        if (sv.is_zero()) {
          CHECK(jv.is_zero());
          continue;
        }
        if (!ratio) ratio = jv / sv;
        CHECK(jv == *ratio * sv);
      }
    }
  }
}

TEST_CASE("content products") {
  CHECK(content_product(L({1}), 2) == P("u1*u2"));
  CHECK(content_product(L({2}), 2) == P("u1*u2*(u1 + 1 + b)*(u2 + 1 + b)"));
  CHECK(content_product(L({1, 1}), 2) == P("u1*u2*(u1 - 1)*(u2 - 1)"));
  CHECK(content_product(L({1, 1}), 2, ContentConvention::transposed) == content_product(L({2}), 2));
  CHECK(content_product(Partition(), 3).is_one());
}

TEST_CASE("Jack expansion of the partition function") {
  TauSeries bip = tau_jack(Model::parse("bip"), 1);
  CHECK(bip.coeffs[1] == PPoly::p(1).scaled(P("u1*u2/(1+b)")));
  for (auto name : {"bip", "threeconst", "biple3"}) {
    Model model = Model::parse(name);
    CAPTURE(name);
    CHECK(calibrate_content(model) == ContentConvention::standard);
    CHECK(tau_jack(model, 4).coeffs == tau_evolve(model, 4).coeffs);
  }
  Model general(ModelTag::bip_le3, {{Var::q1, 0}, {Var::q3, 0}});
  CHECK(tau_jack(general, 4).coeffs == tau_evolve(general, 4).coeffs);
}

TEST_CASE("the transposed content convention does not reproduce the evolution") {
  CHECK(tau_jack(Model::parse("bip"), 2, ContentConvention::transposed).coeffs != tau_evolve(Model::parse("bip"), 2).coeffs);
}
