#include <doctest.h>

#include "catfib/fixtures.hpp"
#include "catfib/pointed.hpp"

using namespace catfib;
namespace fx = catfib::fixtures;

namespace {

PtdCatMor m1() {  // (pt, One) → (a, Two)
  auto f = Functor::validate("Fa", fx::one(), fx::two(), {{"pt", "a"}}, {});
  return makePtdCatMor(makePointedCat("pt", fx::one()),
                       makePointedCat("a", fx::two()), f, "id:a");
}

PtdCatMor m2() {  // (a, Two) → (1, PSet)
  auto g = Functor::validate("G", fx::two(), fx::pset(),
                             {{"a", "e"}, {"b", "1"}}, {{"f", "e1"}});
  return makePtdCatMor(makePointedCat("a", fx::two()),
                       makePointedCat("1", fx::pset()), g, "e1");
}

PtdCatMor m3() {  // (1, PSet) → (12, PSet)
  return makePtdCatMor(makePointedCat("1", fx::pset()),
                       makePointedCat("12", fx::pset()),
                       identityFunctor(fx::pset()), "1_12");
}

}  // namespace

TEST_CASE("pointed categories validate their point") {
  CHECK_NOTHROW(makePointedCat("a", fx::two()));
  CHECK_THROWS_AS(makePointedCat("zz", fx::two()), CatError);
}

TEST_CASE("pointed morphisms validate their comparison") {
  auto f = Functor::validate("Fa", fx::one(), fx::two(), {{"pt", "a"}}, {});
  // f: a→b is not a morphism F(pt)→a.
  CHECK_THROWS_AS(makePtdCatMor(makePointedCat("pt", fx::one()),
                                makePointedCat("a", fx::two()), f, "f"),
                  CatError);
}

TEST_CASE("terminally pointed recognition") {
  CHECK(isTerminallyPointedCat(makePointedCat("b", fx::two())));
  CHECK_FALSE(isTerminallyPointedCat(makePointedCat("a", fx::two())));
  CHECK(isTerminallyPointedCat(makePointedCat("12", fx::pset())));
  CHECK_FALSE(isTerminallyPointedCat(makePointedCat("e", fx::pset())));
}

TEST_CASE("identity is neutral for pointed composition") {
  auto m = m2();
  CHECK(ptdMorEqual(composePtd(identityPtd(m.dom), m), m));
  CHECK(ptdMorEqual(composePtd(m, identityPtd(m.cod)), m));
}

TEST_CASE("pointed composition is associative") {
  auto lhs = composePtd(composePtd(m1(), m2()), m3());
  auto rhs = composePtd(m1(), composePtd(m2(), m3()));
  CHECK(ptdMorEqual(lhs, rhs));
  // Comparisons compose like inclusions in the poset.
  CHECK(lhs.comparison == "e12");
}

TEST_CASE("pointed composition rejects mismatched endpoints") {
  CHECK_THROWS_AS(composePtd(m1(), m3()), CatError);
}

TEST_CASE("G lands in terminally pointed categories") {
  for (const auto& c : fx::corpus())
    for (const auto& a : c->objects()) {
      auto g = gPointed(makePointedCat(a, c));
      CHECK(g.cat.point == "id:" + a);
      CHECK(isTerminallyPointedCat(g.cat));
    }
}

TEST_CASE("G of (b, Two) has a two-object carrier") {
  auto g = gPointed(makePointedCat("b", fx::two()));
  CHECK(g.cat.carrier->numObjects() == 2);
}

TEST_CASE("G preserves identities") {
  for (const std::string a : {"e", "1", "12"}) {
    auto p = makePointedCat(a, fx::pset());
    CHECK(ptdMorEqual(gOnMor(identityPtd(p)), identityPtd(gPointed(p).cat)));
  }
}

TEST_CASE("G preserves composition") {
  CHECK(gPreservesComposition(m1(), m2()));
  CHECK(gPreservesComposition(m2(), m3()));
  CHECK(gPreservesComposition(composePtd(m1(), m2()), m3()));
}

TEST_CASE("the universal arrow has the expected shape") {
  auto p = makePointedCat("12", fx::pset());
  auto u = universalArrowPtd(p);
  CHECK(u.comparison == "id:12");
  CHECK(u.functor.applyObj("id:12") == "12");
}

TEST_CASE("universal arrow verification on One-based tests") {
  auto p = makePointedCat("12", fx::pset());
  auto test = makePtdCatMor(
      makePointedCat("pt", fx::one()), p,
      Functor::validate("F", fx::one(), fx::pset(), {{"pt", "12"}}, {}), "id:12");
  auto factor = verifyUniversalArrow(p, test);
  CHECK(ptdMorEqual(composePtd(factor, universalArrowPtd(p)), test));
}

TEST_CASE("universal arrow verification on Two-based tests") {
  auto p = makePointedCat("12", fx::pset());
  auto f = Functor::validate("F", fx::two(), fx::pset(),
                             {{"a", "e"}, {"b", "1"}}, {{"f", "e1"}});
  auto test = makePtdCatMor(makePointedCat("b", fx::two()), p, f, "1_12");
  auto factor = verifyUniversalArrow(p, test);
  CHECK(factor.cod.point == "id:12");
  CHECK(factor.comparison == "1_12|id:12");
  CHECK(ptdMorEqual(composePtd(factor, universalArrowPtd(p)), test));
}

TEST_CASE("universal arrow verification across the fixture corpus") {
  // For every object A and every morphism α: X → A, the constant test
  // (pt ↦ X, α) factors uniquely.
  for (const auto& c : {fx::two(), fx::pset(), fx::monoid3()})
    for (const auto& m : c->morphisms()) {
      auto p = makePointedCat(m.cod, c);
      auto test = makePtdCatMor(
          makePointedCat("pt", fx::one()), p,
          Functor::validate("F", fx::one(), c, {{"pt", m.dom}}, {}), m.name);
      CHECK_NOTHROW(static_cast<void>(verifyUniversalArrow(p, test)));
    }
}

TEST_CASE("a tampered factorization fails the equation") {
  auto p = makePointedCat("12", fx::pset());
  auto f = Functor::validate("F", fx::two(), fx::pset(),
                             {{"a", "e"}, {"b", "1"}}, {{"f", "e1"}});
  auto test = makePtdCatMor(makePointedCat("b", fx::two()), p, f, "1_12");
  auto factor = verifyUniversalArrow(p, test);
  // Collapsing the candidate onto the slice point breaks the equation.
  auto g = gPointed(p);
  auto collapse = Functor::validate(
      "bad", fx::two(), g.cat.carrier,
      {{"a", g.cat.point}, {"b", g.cat.point}}, {{"f", "id:" + g.cat.point}});
  auto bad = makePtdCatMor(factor.dom, factor.cod, collapse, "id:" + g.cat.point);
  CHECK_FALSE(ptdMorEqual(composePtd(bad, universalArrowPtd(p)), test));
}

TEST_CASE("tests must leave a terminally pointed category") {
  auto p = makePointedCat("12", fx::pset());
  auto f = Functor::validate("F", fx::two(), fx::pset(),
                             {{"a", "e"}, {"b", "1"}}, {{"f", "e1"}});
  // (a, Two) is pointed but not terminally pointed.
  auto test = makePtdCatMor(makePointedCat("a", fx::two()), p,
                            Functor::validate("F2", fx::two(), fx::pset(),
                                              {{"a", "1"}, {"b", "12"}},
                                              {{"f", "1_12"}}),
                            "1_12");
  CHECK_THROWS_WITH_AS(static_cast<void>(verifyUniversalArrow(p, test)),
                       doctest::Contains("ShapeMismatch"), CatError);
}
