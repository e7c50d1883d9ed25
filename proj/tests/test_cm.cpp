#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "splitcm/cm.hpp"
#include "splitcm/corpus.hpp"
#include "splitcm/families.hpp"
#include "splitcm/oracle.hpp"

using namespace splitcm;
using test::mk;
using test::mono;

namespace {
const gf::FieldSpec kFBig(32003);

MonomialIdeal example42() {
  return mk(4, {"x1^2", "x1*x3", "x3^2", "x1*x2*x4", "x2*x3*x4", "x2^2*x4^2"});
}
}  // namespace

TEST_SUITE("cm") {

TEST_CASE("worked example: full profile") {
  Splitter sp;
  MonomialIdeal I = example42();
  CertPtr cert = sp.certify(I);
  REQUIRE(cert != nullptr);
  HomologicalSummary s = analyze(*cert);
  CHECK(s.cm);
  CHECK(s.depth == 1);
  CHECK(s.krull_dim == 1);
  CHECK(s.proj_dim == 3);
  CHECK(s.reg == 3);
  CHECK(s.paths_agree);
  CHECK(is_componentwise_polymatroidal(I));
  CHECK(is_cm_oracle(I, kFBig));
  CHECK(depth_oracle(I, kFBig) == 1);
}

TEST_CASE("non-CM path ideal") {
  Splitter sp;
  CertPtr cert = sp.certify(mk(3, {"x1*x2", "x2*x3"}));
  REQUIRE(cert != nullptr);
  HomologicalSummary s = analyze(*cert);
  CHECK(!s.cm);
  CHECK(s.depth == 1);
  CHECK(s.krull_dim == 2);
  CHECK(!s.cm_type.has_value());
}

TEST_CASE("square of the maximal ideal in two variables") {
  Splitter sp;
  CertPtr cert = sp.certify(mk(2, {"x1^2", "x1*x2", "x2^2"}));
  REQUIRE(cert != nullptr);
  HomologicalSummary s = analyze(*cert);
  CHECK(s.cm);
  CHECK(s.depth == 0);
  CHECK(s.krull_dim == 0);
  CHECK(s.proj_dim == 2);
  CHECK(s.reg == 1);
  REQUIRE(s.cm_type.has_value());
  CHECK(*s.cm_type == 2);
  CHECK(!s.gorenstein);
  CHECK(s.level.value());
  CHECK(!s.pseudo_gorenstein.value());
  CHECK(cm_type_recursive(*cert) == 2);
  CHECK(level_recursive(*cert));
  CHECK(!pseudo_gorenstein_recursive(*cert));
}

TEST_CASE("gorenstein detection") {
  CHECK(is_gorenstein(mk(3, {"x1*x2*x3"})));
  CHECK(is_gorenstein(mk(3, {"x1", "x3"})));
  CHECK(is_gorenstein(MonomialIdeal::maximal(RingContext(4))));
  CHECK(!is_gorenstein(mk(2, {"x1^2", "x1*x2", "x2^2"})));
  CHECK(!is_gorenstein(mk(3, {"x1*x2", "x1*x3", "x2*x3"})));

  // complete intersections of variables have type 1 in the table as well
  Splitter sp;
  CertPtr cert = sp.certify(mk(3, {"x1", "x3"}));
  REQUIRE(cert != nullptr);
  HomologicalSummary s = analyze(*cert);
  CHECK(s.cm);
  CHECK(*s.cm_type == 1);
  CHECK(s.gorenstein);
  CHECK(s.pseudo_gorenstein.value());
  CHECK(s.level.value());
}

TEST_CASE("type recursion agrees with the table on CM corpus ideals") {
  Splitter sp;
  int checked = 0;
  for (const MonomialIdeal& I : enumerate_antichain_ideals(3, 4, 3)) {
    CertPtr cert = sp.certify(I);
    if (!cert) continue;
    HomologicalSummary s = analyze(*cert);
    if (!s.cm) continue;
    ++checked;
    CHECK(cm_type_recursive(*cert) == *s.cm_type);
    CHECK(level_recursive(*cert) == *s.level);
    CHECK(pseudo_gorenstein_recursive(*cert) == *s.pseudo_gorenstein);
    CHECK(s.gorenstein == (*s.cm_type == 1));
  }
  CHECK(checked > 100);
}

TEST_CASE("triangle is level but not pseudo-gorenstein") {
  Splitter sp;
  CertPtr cert = sp.certify(mk(3, {"x1*x2", "x1*x3", "x2*x3"}));
  REQUIRE(cert != nullptr);
  HomologicalSummary s = analyze(*cert);
  CHECK(s.cm);
  CHECK(*s.cm_type == 2);
  CHECK(s.level.value());
  CHECK(!s.pseudo_gorenstein.value());
}

TEST_CASE("explanations verify the inductive step") {
  Splitter sp;
  MonomialIdeal I = example42();
  CertPtr cert = sp.certify(I);
  REQUIRE(cert != nullptr);
  auto tree = explain_cm(*cert, sp);
  REQUIRE(tree != nullptr);
  CHECK(tree->cm);
  CHECK(tree->kind == "split");
  CHECK(tree->hypothesis);  // I sits inside m^2
  CHECK(tree->colon_matches_inner);
  CHECK(explanation_agrees_everywhere(*tree));
  REQUIRE(tree->theorem_verdict.has_value());
  CHECK(*tree->theorem_verdict == tree->cm);

  std::string j = explanation_json(*tree);
  CHECK(j.find("\"hypothesis\":true") != std::string::npos);
  CHECK(j.find("\"cm\":true") != std::string::npos);
}

TEST_CASE("explanation hypothesis is dropped below degree two") {
  Splitter sp;
  MonomialIdeal I = mk(2, {"x1", "x2"});  // maximal ideal: not inside m^2
  CertPtr cert = sp.certify(I);
  REQUIRE(cert != nullptr);
  auto tree = explain_cm(*cert, sp);
  CHECK(!tree->hypothesis);
  CHECK(explanation_agrees_everywhere(*tree));  // vacuous at the root
}

TEST_CASE("theorem shape holds at every admissible vertex of small ideals") {
  Splitter sp;
  for (const MonomialIdeal& I : enumerate_antichain_ideals(3, 3, 3)) {
    if (!I.inside_m_squared()) continue;
    CertPtr cert = sp.certify(I);
    if (!cert) continue;
    bool lhs = is_cm(*cert);
    for (int var : admissible_split_vars(I)) {
      // a splitting vertex needs splittable parts, not just the containment
      if (!sp.certify_with_root(I, var)) continue;
      // inside m^2 the colon stays proper, so the oracle applies to both parts
      MonomialIdeal colon = I.colon_by_variable(var);
      MonomialIdeal sum = I.plus_variable(var);
      bool rhs = is_cm_oracle(colon, kFBig) && is_cm_oracle(sum, kFBig) &&
                 depth_oracle(colon, kFBig) == depth_oracle(sum, kFBig);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("is_cm rejects degenerate certificates") {
  Splitter sp;
  CHECK_THROWS_AS(is_cm(*sp.certify(MonomialIdeal::zero(RingContext(2)))), std::domain_error);
  CHECK_THROWS_AS(is_cm(*sp.certify(MonomialIdeal::unit(RingContext(2)))), std::domain_error);
}

}  // TEST_SUITE
