#include <catch_amalgamated.hpp>

#include "vknot/laurent.hpp"

using namespace vknot;

TEST_CASE("one-variable arithmetic never stores zero coefficients") {
  LaurentPoly p;
  CHECK(p.is_zero());
  p.add_term(1, 2);
  p.add_term(1, -2);
  CHECK(p.is_zero());
  CHECK(p.terms.empty());

  p.add_term(-1, 1);
  p.add_term(0, -2);
  p.add_term(1, 1);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(0) == -2);
  CHECK(p.coeff(5) == 0);
  CHECK(p.sum_of_coefficients() == 0);

  LaurentPoly q = LaurentPoly::monomial(0, 2);
  CHECK((p + q).coeff(0) == 0);
  CHECK((p - p).is_zero());
  CHECK((-p).coeff(0) == 2);
}

TEST_CASE("one-variable rendering") {
  auto poly = [](std::initializer_list<std::pair<int, long long>> ts) {
    LaurentPoly p;
    for (auto [e, c] : ts) p.add_term(e, c);
    return p;
  };
  CHECK(LaurentPoly{}.render() == "0");
  CHECK(poly({{0, 5}}).render() == "5");
  CHECK(poly({{0, -1}}).render() == "-1");
  CHECK(poly({{1, 1}}).render() == "t");
  CHECK(poly({{1, -1}}).render() == "-t");
  CHECK(poly({{2, 3}}).render() == "3*t^2");
  CHECK(poly({{-2, -3}}).render() == "-3*t^-2");
  CHECK(poly({{-1, 1}, {0, -2}, {1, 1}}).render() == "t^-1 - 2 + t");
  CHECK(poly({{1, 1}, {2, -1}}).render() == "t - t^2");
  CHECK(poly({{-3, 2}, {4, -7}}).render() == "2*t^-3 - 7*t^4");
}

TEST_CASE("substitution t -> 1/t and palindromicity") {
  LaurentPoly p;
  p.add_term(-1, 1);
  p.add_term(0, -2);
  p.add_term(1, 1);
  CHECK(p.substitute_t_inverse() == p);
  CHECK(p.is_palindromic());

  LaurentPoly q;
  q.add_term(1, 1);
  q.add_term(2, 3);
  LaurentPoly qi = q.substitute_t_inverse();
  CHECK(qi.coeff(-1) == 1);
  CHECK(qi.coeff(-2) == 3);
  CHECK_FALSE(q.is_palindromic());
  CHECK(qi.substitute_t_inverse() == q);
}

TEST_CASE("one-variable JSON form is a list of [exponent, coefficient] pairs") {
  LaurentPoly p;
  p.add_term(1, 1);
  p.add_term(-1, 1);
  p.add_term(0, -2);
  CHECK(p.to_json().dump() == "[[-1,1],[0,-2],[1,1]]");
  CHECK(LaurentPoly{}.to_json().dump() == "[]");
}

TEST_CASE("two-variable polynomials") {
  LaurentPoly2 p;
  p.add_term(-2, 2, 1);
  p.add_term(1, 0, 1);
  CHECK(p.render() == "t^-2*l^2 + t");
  CHECK(p.to_json().dump() == "[[-2,2,1],[1,0,1]]");
  CHECK(p.coeff(-2, 2) == 1);
  CHECK(p.coeff(0, 0) == 0);

  SECTION("rendering edge cases") {
    CHECK(LaurentPoly2{}.render() == "0");
    CHECK(LaurentPoly2::monomial(0, 0, 2).render() == "2");
    CHECK(LaurentPoly2::monomial(0, 1, 1).render() == "l");
    CHECK(LaurentPoly2::monomial(1, 2, -1).render() == "-t*l^2");
    CHECK(LaurentPoly2::monomial(0, -1, 4).render() == "4*l^-1");
  }

  SECTION("cancellation and arithmetic") {
    LaurentPoly2 q = p;
    q += -p;
    CHECK(q.is_zero());
    CHECK((p - p).is_zero());
  }

  SECTION("setting l = 1 collapses exponents and merges coefficients") {
    LaurentPoly2 q;
    q.add_term(1, 3, 2);
    q.add_term(1, -1, 1);
    q.add_term(0, 2, -4);
    LaurentPoly s = q.substitute_l_one();
    CHECK(s.coeff(1) == 3);
    CHECK(s.coeff(0) == -4);

    LaurentPoly2 cancels;
    cancels.add_term(2, 1, 1);
    cancels.add_term(2, 5, -1);
    CHECK(cancels.substitute_l_one().is_zero());
  }

  SECTION("embedding a one-variable polynomial uses l-exponent zero") {
    LaurentPoly one;
    one.add_term(-1, 1);
    one.add_term(0, -2);
    one.add_term(1, 1);
    LaurentPoly2 e = embed(one);
    CHECK(e.render() == "t^-1 - 2 + t");
    CHECK(e.substitute_l_one() == one);
  }
}
