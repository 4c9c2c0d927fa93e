#include <doctest.h>

#include "bdeform/errors.hpp"
#include "bdeform/ppoly.hpp"

using namespace bdeform;

TEST_CASE("monomials order by degree first") {
  PMonomial p1 = PMonomial::power(1);
  PMonomial p2 = PMonomial::power(2);
  PMonomial p1sq = PMonomial::power(1, 2);
  CHECK(p1 < p2);
  CHECK(p1sq < PMonomial::power(3));
  CHECK(p1sq.degree() == 2);
  CHECK((p1 * p2).to_string() == "p1*p2");
  CHECK((p1sq * p2 * p2).to_string() == "p1^2*p2^2");
  CHECK((p1sq * p2).length() == 3);
  CHECK(exact_quotient(p1sq * p2, p1) == p1 * p2);
  CHECK((p1 * p2).divisible_by(p2));
  CHECK_FALSE(p1.divisible_by(p2));
  CHECK(PMonomial::from_pairs({{2, 1}, {1, 2}}) == p1sq * p2);
  CHECK_THROWS_AS(PMonomial::power(0), InvalidArgument);
  CHECK_THROWS_AS(PMonomial::power(300), BoundExceeded);
}

TEST_CASE("p_i vanishes for nonpositive index") {
  CHECK(PPoly::p(0).is_zero());
  CHECK(PPoly::p(-2).is_zero());
  CHECK(PPoly::p(3).degree() == 3);
}

TEST_CASE("polynomial arithmetic and p*") {
  PPoly f = PPoly::p(1) * PPoly::p(1) + PPoly::p(2).scaled(Coeff::var(Var::b));
  CHECK(f.is_homogeneous(2));
  CHECK(f.degree() == 2);
  CHECK((f - f).is_zero());
  // p*_1 (p1^2) = 2 p1, p*_2 (b p2) = 2b
  CHECK(f.pstar(1) == PPoly::p(1).scaled(2));
  CHECK(f.pstar(2) == PPoly(Coeff::var(Var::b).scaled(2)));
  CHECK(f.pstar(3).is_zero());
  PPoly g = f + PPoly::p(3);
  CHECK_FALSE(g.is_homogeneous(2));
  CHECK(g.degree_slice(3) == PPoly::p(3));
  CHECK(g.coeff(PMonomial::power(2)) == Coeff::var(Var::b));
  CHECK(PPoly(Coeff()).is_zero());
  CHECK(PPoly().degree() == -1);
}

TEST_CASE("printing") {
  PPoly f = PPoly::p(1).scaled(Coeff::parse("u1*u2/(1+b)"));
  CHECK(f.to_string() == "(u1*u2/(1+b)^1)*p1");
  CHECK(PPoly(Coeff(1)).to_string() == "1");
  CHECK(PPoly().to_string() == "0");
}
