#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "splitcm/monomial.hpp"

using namespace splitcm;
using test::mask;
using test::mk;
using test::mono;

TEST_SUITE("monomial") {

TEST_CASE("monomial basics") {
  Monomial u = mono(4, "x1^2*x3");
  CHECK(u.degree() == 3);
  CHECK(u.exponent(1) == 2);
  CHECK(u.exponent(3) == 1);
  CHECK(u.support() == mask({1, 3}));
  CHECK(u.max_var() == 3);
  CHECK(u.index_word() == std::vector<int>{1, 1, 3});
  CHECK(Monomial::one(4).is_one());
  CHECK(Monomial::one(4).max_var() == 0);
  CHECK(u.is_squarefree() == false);
  CHECK(mono(4, "x1*x3").is_squarefree());
}

TEST_CASE("divisibility and lcm") {
  Monomial u = mono(3, "x1*x2");
  Monomial v = mono(3, "x1^2*x2*x3");
  CHECK(u.divides(v));
  CHECK(!v.divides(u));
  CHECK(u.lcm(mono(3, "x2^2")) == mono(3, "x1*x2^2"));
  CHECK(v.divide_by_variable(1) == mono(3, "x1*x2*x3"));
  CHECK(mono(3, "x1^2*x2").quotient_by(mono(3, "x2*x3")) == mono(3, "x1^2"));
  CHECK(mono(3, "x1").times_variable(1) == mono(3, "x1^2"));
}

TEST_CASE("lex order") {
  CHECK(mono(3, "x1").lex_less(mono(3, "x1^2")));
  CHECK(!mono(3, "x1^2").lex_less(mono(3, "x1")));
  CHECK(mono(2, "x2").lex_less(mono(2, "x1")) != mono(2, "x1").lex_less(mono(2, "x2")));
  CHECK(!mono(2, "x1").lex_less(mono(2, "x1")));
}

TEST_CASE("ideal canonicalization") {
  MonomialIdeal I = mk(3, {"x1*x2", "x1", "x1"});
  CHECK(I.num_gens() == 1);
  CHECK(I.gens()[0] == mono(3, "x1"));
  CHECK(mk(3, {"1", "x1"}).is_unit());
  CHECK(MonomialIdeal::zero(RingContext(3)).is_zero());
  CHECK(MonomialIdeal::maximal(RingContext(3)).num_gens() == 3);
  CHECK(mk(3, {"x1^2"}).is_principal());
  CHECK(!mk(3, {"x1", "x2"}).is_principal());
  CHECK(mk(3, {"x1", "x3"}).is_variable_generated());
  CHECK(!mk(3, {"x1", "x2*x3"}).is_variable_generated());
  CHECK(mk(3, {"x1^2", "x2*x3"}).inside_m_squared());
  CHECK(!mk(3, {"x1", "x2*x3"}).inside_m_squared());
  CHECK(mk(3, {"x1*x2", "x2*x3"}).is_equigenerated());
  CHECK(!mk(3, {"x1", "x2*x3"}).is_equigenerated());
  CHECK(mk(4, {"x1*x3"}).effective_num_vars() == 3);
}

TEST_CASE("membership and ideal arithmetic") {
  MonomialIdeal I = mk(3, {"x1*x2", "x2*x3"});
  CHECK(I.contains(mono(3, "x1*x2^2*x3")));
  CHECK(!I.contains(mono(3, "x1*x3")));
  CHECK(I.colon_by_variable(2) == mk(3, {"x1", "x3"}));
  CHECK(I.colon_by_variable(1) == mk(3, {"x2", "x2*x3"}));  // minimalizes to (x2)
  CHECK(I.colon_by_variable(1) == mk(3, {"x2"}));
  CHECK(I.colon_by_monomial(mono(3, "x1*x2")) == MonomialIdeal::unit(RingContext(3)));
  CHECK(I.plus_variable(2) == mk(3, {"x2"}));
  CHECK(I.plus(mk(3, {"x1"})) == mk(3, {"x1", "x2*x3"}));
  CHECK(mk(3, {"x2"}).times_variable(1) == mk(3, {"x1*x2"}));
  CHECK(mk(3, {"x1", "x2"}).is_subideal_of(mk(3, {"x1", "x2"})));
  CHECK(mk(3, {"x1*x2"}).is_subideal_of(mk(3, {"x1"})));
  CHECK(!mk(3, {"x1"}).is_subideal_of(mk(3, {"x1*x2"})));
}

TEST_CASE("degree components") {
  MonomialIdeal I = mk(3, {"x1", "x2*x3"});
  MonomialIdeal deg2 = I.degree_component(2);
  CHECK(deg2 == mk(3, {"x1^2", "x1*x2", "x1*x3", "x2*x3"}));
  MonomialIdeal restricted = I.degree_component(2, mask({2, 3}));
  CHECK(restricted == mk(3, {"x2*x3"}));
  CHECK(mk(2, {"x1"}).degree_component(3) == mk(2, {"x1^3", "x1^2*x2", "x1*x2^2"}));
}

TEST_CASE("krull dimension via covers") {
  CHECK(mk(3, {"x1*x2", "x2*x3"}).krull_dim_quotient() == 2);
  CHECK(mk(3, {"x1", "x2", "x3"}).krull_dim_quotient() == 0);
  CHECK(mk(2, {"x1^2"}).krull_dim_quotient() == 1);
  CHECK(mk(2, {"x1^2", "x1*x2"}).krull_dim_quotient() == 1);
  CHECK(MonomialIdeal::zero(RingContext(3)).krull_dim_quotient() == 3);
  CHECK_THROWS_AS(MonomialIdeal::unit(RingContext(3)).krull_dim_quotient(), std::domain_error);
  CHECK(mk(3, {"x1*x2", "x1*x3", "x2*x3"}).krull_dim_quotient() == 1);
}

TEST_CASE("monomial enumeration counts") {
  RingContext r3(3), r4(4);
  CHECK(monomials_of_degree(r3, 2).size() == 6);
  CHECK(monomials_of_degree(r4, 3).size() == 20);
  CHECK(squarefree_monomials_of_degree(r4, 2).size() == 6);
  CHECK(squarefree_monomials_of_degree(r4, 4).size() == 1);
  CHECK(monomials_of_degree(r3, 2, mask({1, 3})).size() == 3);
  CHECK(squarefree_monomials_of_degree(r4, 2, mask({1, 2, 4})).size() == 3);
}

TEST_CASE("support covers") {
  std::vector<VarMask> path = {mask({1, 2}), mask({2, 3})};
  CHECK(min_support_cover(path, 3) == 1);
  auto covers = minimal_support_covers(path, 3);
  CHECK(covers.size() == 2);
  CHECK(std::count(covers.begin(), covers.end(), mask({2})) == 1);
  CHECK(std::count(covers.begin(), covers.end(), mask({1, 3})) == 1);

  std::vector<VarMask> triangle = {mask({1, 2}), mask({1, 3}), mask({2, 3})};
  CHECK(min_support_cover(triangle, 3) == 2);
  CHECK(minimal_support_covers(triangle, 3).size() == 3);
}

TEST_CASE("keys distinguish ideals") {
  CHECK(mk(3, {"x1"}).key() == mk(3, {"x1", "x1*x2"}).key());
  CHECK(mk(3, {"x1"}).key() != mk(3, {"x2"}).key());
  CHECK(mk(2, {"x1"}).key() != mk(3, {"x1"}).key());
  CHECK(MonomialIdeal::zero(RingContext(2)).key() != MonomialIdeal::unit(RingContext(2)).key());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(RingContext(0), std::invalid_argument);
  CHECK_THROWS_AS(RingContext(64), std::invalid_argument);
  CHECK_THROWS_AS(MonomialIdeal::zero(RingContext(2)).min_gen_degree(), std::domain_error);
  CHECK(mk(2, {"x1", "x2^3"}).min_gen_degree() == 1);
  CHECK(mk(2, {"x1", "x2^3"}).max_gen_degree() == 3);
}

}  // TEST_SUITE
