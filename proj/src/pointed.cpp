#include "catfib/pointed.hpp"

#include "catfib/equiv.hpp"
#include "catfib/limits.hpp"

namespace catfib {

namespace {

/// Name of the slice-carrier morphism with underlying g landing on the
/// carrier object codObj (the identity triangle degenerates to an identity).
std::string triName(const CatPtr& base, const std::string& g, const std::string& codObj) {
  if (base->isIdentity(base->requireMor(g))) return "id:" + codObj;
  return sliceMorName(g, codObj);
}

/// D → D/1 for a terminal object 1 of D: X ↦ the unique !_X: X → 1.
Functor unitSlice(const CatPtr& d, const std::string& one) {
  auto slice = buildSlice(d, one);
  const int t = d->requireObject(one);
  std::map<std::string, std::string> om, mm;
  for (int x = 0; x < static_cast<int>(d->numObjects()); ++x)
    om[d->objects()[x]] = d->mor(d->hom(x, t).front()).name;
  for (const auto& m : d->morphisms())
    if (!d->isIdentity(d->morIndex(m.name))) mm[m.name] = triName(d, m.name, om[m.cod]);
  return Functor::validate(d->name() + "/!", d, slice.carrier, om, mm);
}

}  // namespace

PointedCat makePointedCat(const std::string& point, const CatPtr& carrier) {
  if (carrier->numObjects() == 0)
    throw CatError("EmptyCategory", "a pointed category needs an object");
  carrier->requireObject(point);
  return {point, carrier};
}

PtdCatMor makePtdCatMor(const PointedCat& dom, const PointedCat& cod,
                        const Functor& functor, const std::string& comparison) {
  if (!(*functor.source() == *dom.carrier) || !(*functor.target() == *cod.carrier))
    throw CatError("ShapeMismatch",
                   functor.name() + " does not run between the carriers");
  const auto& alpha = cod.carrier->mor(cod.carrier->requireMor(comparison));
  if (alpha.dom != functor.applyObj(dom.point) || alpha.cod != cod.point)
    throw CatError("ShapeMismatch",
                   "comparison " + comparison + " is not F(" + dom.point + ") -> " +
                       cod.point);
  return {dom, cod, functor, comparison};
}

PtdCatMor identityPtd(const PointedCat& p) {
  return {p, p, identityFunctor(p.carrier), "id:" + p.point};
}

PtdCatMor composePtd(const PtdCatMor& first, const PtdCatMor& second) {
  if (!(*first.cod.carrier == *second.dom.carrier) ||
      first.cod.point != second.dom.point)
    throw CatError("ShapeMismatch", "pointed morphisms are not composable");
  const auto& d = second.cod.carrier;
  const std::string galpha = second.functor.applyMor(first.comparison);
  return {first.dom, second.cod, composeFunctors(first.functor, second.functor),
          d->composeName(galpha, second.comparison)};
}

bool ptdMorEqual(const PtdCatMor& a, const PtdCatMor& b) {
  return a.functor == b.functor && a.comparison == b.comparison &&
         a.dom.point == b.dom.point && a.cod.point == b.cod.point;
}

bool isTerminallyPointedCat(const PointedCat& p) {
  const int t = p.carrier->requireObject(p.point);
  for (int x = 0; x < static_cast<int>(p.carrier->numObjects()); ++x)
    if (p.carrier->hom(x, t).size() != 1) return false;
  return true;
}

GResult gPointed(const PointedCat& p) {
  auto slice = buildSlice(p.carrier, p.point);
  return {{"id:" + p.point, slice.carrier}, std::move(slice)};
}

PtdCatMor gOnMor(const PtdCatMor& m) {
  auto gd = gPointed(m.dom);
  auto gc = gPointed(m.cod);
  auto fSlice = sliceFunctor(m.functor, m.dom.point);  // C/A → D/FA
  auto sigma = sigmaF(m.cod.carrier, m.comparison);    // D/FA → D/B
  auto functor = composeFunctors(fSlice, sigma);
  return makePtdCatMor(gd.cat, gc.cat, functor,
                       triName(m.cod.carrier, m.comparison, gc.cat.point));
}

bool gPreservesComposition(const PtdCatMor& first, const PtdCatMor& second) {
  return ptdMorEqual(gOnMor(composePtd(first, second)),
                     composePtd(gOnMor(first), gOnMor(second)));
}

PtdCatMor universalArrowPtd(const PointedCat& p) {
  auto g = gPointed(p);
  return makePtdCatMor(g.cat, p, g.slice.proj, "id:" + p.point);
}

PtdCatMor verifyUniversalArrow(const PointedCat& p, const PtdCatMor& test,
                               long long budget) {
  if (!isTerminallyPointedCat(test.dom))
    throw CatError("ShapeMismatch", "test morphism must leave a terminally "
                                    "pointed category");
  if (!(*test.cod.carrier == *p.carrier) || test.cod.point != p.point)
    throw CatError("ShapeMismatch", "test morphism does not land in the instance");
  auto univ = universalArrowPtd(p);
  auto g = gPointed(p);

  // F̄ = Σ_α ∘ F/1, ᾱ = α as the unique morphism into 1_A. F/1 is read
  // against the comparison D ≅ D/1.
  auto unit = unitSlice(test.dom.carrier, test.dom.point);   // D → D/1
  auto fSlice = sliceFunctor(test.functor, test.dom.point);  // D/1 → C/F1
  auto sigma = sigmaF(p.carrier, test.comparison);           // C/F1 → C/A
  auto fbar = composeFunctors(unit, composeFunctors(fSlice, sigma));
  auto factor = makePtdCatMor(test.dom, g.cat, fbar,
                              triName(p.carrier, test.comparison, g.cat.point));
  if (!ptdMorEqual(composePtd(factor, univ), test))
    throw CatError("FactorizationFailure",
                   "the canonical factorization does not recover the test morphism",
                   {{"test", test.functor.name()}, {"comparison", test.comparison}});

  // Uniqueness: every (H, h̄) with Σ_A∘H = F and Σ_A(h̄) = α.
  const CatPtr& d = test.dom.carrier;
  const int slicePoint = g.cat.carrier->requireObject(g.cat.point);
  long long found = 0;
  json extra = json::object();
  enumerateFunctors(d, g.cat.carrier, [&](const Functor& h) {
    if (!(composeFunctors(h, g.slice.proj) == test.functor)) return true;
    const int hx = g.cat.carrier->requireObject(h.applyObj(test.dom.point));
    for (int hb : g.cat.carrier->hom(hx, slicePoint))
      if (g.slice.proj.applyMor(g.cat.carrier->mor(hb).name) == test.comparison) {
        ++found;
        if (found > 1)
          extra = {{"functor_objects", h.objMap()},
                   {"comparison", g.cat.carrier->mor(hb).name}};
      }
    return true;
  }, budget);
  if (found != 1)
    throw CatError("NonUniqueFactorization",
                   "expected exactly one factorization, found " +
                       std::to_string(found),
                   extra);
  return factor;
}

}  // namespace catfib
