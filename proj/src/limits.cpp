#include "catfib/limits.hpp"

#include <algorithm>

namespace catfib {

std::optional<std::string> terminalObject(const CatPtr& c) {
  const int no = static_cast<int>(c->numObjects());
  for (int t = 0; t < no; ++t) {
    bool ok = true;
    for (int x = 0; x < no && ok; ++x)
      if (c->hom(x, t).size() != 1) ok = false;
    if (ok) return c->objects()[t];  // objects are sorted, first hit is smallest
  }
  return std::nullopt;
}

namespace {

std::vector<Cone> allCones(const FinCat& c, int f, int g) {
  std::vector<Cone> cones;
  const int x = c.domOf(f), y = c.domOf(g);
  const int no = static_cast<int>(c.numObjects());
  for (int p = 0; p < no; ++p)
    for (int p1 : c.hom(p, x))
      for (int p2 : c.hom(p, y))
        if (c.composeIdx(p1, f) == c.composeIdx(p2, g))
          cones.push_back({c.objects()[p], c.mor(p1).name, c.mor(p2).name});
  std::sort(cones.begin(), cones.end());
  return cones;
}

/// Morphisms h: apex(cone) → apex(cand) with cand.legs ∘ h = cone.legs.
std::vector<int> mediatorsInto(const FinCat& c, const Cone& cand, const Cone& cone) {
  std::vector<int> out;
  const int apexTo = c.objectIndex(cand.apex);
  const int apexFrom = c.objectIndex(cone.apex);
  const int q1 = c.morIndex(cand.leg1), q2 = c.morIndex(cand.leg2);
  const int p1 = c.morIndex(cone.leg1), p2 = c.morIndex(cone.leg2);
  for (int h : c.hom(apexFrom, apexTo))
    if (c.composeIdx(h, q1) == p1 && c.composeIdx(h, q2) == p2) out.push_back(h);
  return out;
}

}  // namespace

std::optional<PullbackResult> pullback(const CatPtr& c, const std::string& f,
                                       const std::string& g) {
  const int fi = c->requireMor(f), gi = c->requireMor(g);
  if (c->codOf(fi) != c->codOf(gi))
    throw CatError("ShapeMismatch", "pullback: cod(" + f + ") ≠ cod(" + g + ")");
  const auto cones = allCones(*c, fi, gi);
  for (const Cone& cand : cones) {  // sorted: first terminal cone is canonical
    PullbackResult res;
    res.cone = cand;
    bool terminal = true;
    for (const Cone& cone : cones) {
      auto meds = mediatorsInto(*c, cand, cone);
      if (meds.size() != 1) {
        terminal = false;
        break;
      }
      res.mediators.emplace_back(cone, c->mor(meds.front()).name);
    }
    if (terminal) return res;
  }
  return std::nullopt;
}

HasPullbacksResult hasPullbacks(const CatPtr& c) {
  const int nm = static_cast<int>(c->numMors());
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c->codOf(f) != c->codOf(g)) continue;
      if (!pullback(c, c->mor(f).name, c->mor(g).name))
        return {false, CospanWitness{c->mor(f).name, c->mor(g).name}};
    }
  return {true, std::nullopt};
}

bool isTerminalCone(const CatPtr& c, const std::string& f, const std::string& g,
                    const Cone& cone) {
  const int fi = c->requireMor(f), gi = c->requireMor(g);
  if (c->codOf(fi) != c->codOf(gi))
    throw CatError("ShapeMismatch", "isTerminalCone: not a cospan");
  const int l1 = c->morIndex(cone.leg1), l2 = c->morIndex(cone.leg2);
  if (l1 < 0 || l2 < 0 || c->composeIdx(l1, fi) != c->composeIdx(l2, gi)) return false;
  for (const Cone& other : allCones(*c, fi, gi))
    if (mediatorsInto(*c, cone, other).size() != 1) return false;
  return true;
}

std::string mediatingMorphism(const CatPtr& c, const PullbackResult& pb, const Cone& cone) {
  for (const auto& [kn, med] : pb.mediators)
    if (kn == cone) return med;
  // Cone not enumerated: recompute directly.
  auto meds = mediatorsInto(*c, pb.cone, cone);
  if (meds.size() != 1)
    throw CatError("ShapeMismatch",
                   "mediatingMorphism: not a cone over the pullback's cospan",
                   {{"apex", cone.apex}, {"leg1", cone.leg1}, {"leg2", cone.leg2}});
  return c->mor(meds.front()).name;
}

}  // namespace catfib
