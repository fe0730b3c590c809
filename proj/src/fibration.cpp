#include "catfib/fibration.hpp"

#include <algorithm>

namespace catfib {

namespace {

/// Morphisms h: Z→X over v with f∘h = g.
int countFillers(const FinCat& tot, const Functor& p, int f, int z, int v, int g,
                 int* found) {
  int n = 0;
  for (int h : tot.hom(z, tot.domOf(f)))
    if (p.morAt(h) == v && tot.composeIdx(h, f) == g) {
      if (found) *found = h;
      ++n;
    }
  return n;
}

}  // namespace

CartesianCheck isCartesian(const Functor& p, const std::string& f) {
  const FinCat& tot = *p.source();
  const FinCat& base = *p.target();
  const int fi = tot.requireMor(f);
  const int px = p.objAt(tot.domOf(fi));
  const int pf = p.morAt(fi);
  for (int z = 0; z < static_cast<int>(tot.numObjects()); ++z) {
    const int pz = p.objAt(z);
    for (int g : tot.hom(z, tot.codOf(fi)))
      for (int v : base.hom(pz, px)) {
        if (base.composeIdx(v, pf) != p.morAt(g)) continue;
        const int n = countFillers(tot, p, fi, z, v, g, nullptr);
        if (n != 1)
          return {false,
                  {{"f", f},
                   {"g", tot.mor(g).name},
                   {"v", base.mor(v).name},
                   {"fillers", n}}};
      }
  }
  return {true, json::object()};
}

std::vector<char> cartesianMask(const Functor& p) {
  std::vector<char> mask(p.source()->numMors());
  for (std::size_t m = 0; m < mask.size(); ++m)
    mask[m] = isCartesian(p, p.source()->mor(m).name).ok ? 1 : 0;
  return mask;
}

std::string CleavedFibration::cleavageName(const std::string& y,
                                           const std::string& u) const {
  const int yi = total()->requireObject(y);
  const int ui = base()->requireMor(u);
  return total()->mor(cleavage.at({yi, ui})).name;
}

FibrationResult isFibration(const Functor& p) {
  const FinCat& tot = *p.source();
  const FinCat& base = *p.target();
  const auto mask = cartesianMask(p);
  CleavedFibration fib{p, {}};
  for (int y = 0; y < static_cast<int>(tot.numObjects()); ++y) {
    const int py = p.objAt(y);
    for (int u = 0; u < static_cast<int>(base.numMors()); ++u) {
      if (base.codOf(u) != py) continue;
      int lift = -1;  // morphisms are sorted by name: first hit is smallest
      for (int f = 0; f < static_cast<int>(tot.numMors()) && lift < 0; ++f)
        if (tot.codOf(f) == y && p.morAt(f) == u && mask[f]) lift = f;
      if (lift < 0)
        return {std::nullopt,
                {{"object", tot.objects()[y]}, {"base_morphism", base.mor(u).name}}};
      fib.cleavage[{y, u}] = lift;
    }
  }
  return {std::move(fib), json::object()};
}

CleavedFibration mustFibration(const Functor& p) {
  auto res = isFibration(p);
  if (!res.fibration)
    throw CatError("NotAFibration",
                   p.name() + " has an unliftable base morphism", res.counterexample);
  return *std::move(res.fibration);
}

bool isVertical(const Functor& p, const std::string& f) {
  return p.target()->isIdentity(p.morAt(p.source()->requireMor(f)));
}

FiberResult fiberCategory(const Functor& p, const std::string& i) {
  const FinCat& tot = *p.source();
  const int ii = p.target()->requireObject(i);
  RawCategory raw;
  raw.name = tot.name() + "_fib(" + i + ")";
  for (std::size_t o = 0; o < tot.numObjects(); ++o)
    if (p.objAt(static_cast<int>(o)) == ii) raw.objects.push_back(tot.objects()[o]);
  std::vector<int> keep;
  for (std::size_t m = 0; m < tot.numMors(); ++m) {
    const int mi = static_cast<int>(m);
    if (tot.isIdentity(mi) || !p.target()->isIdentity(p.morAt(mi))) continue;
    if (p.objAt(tot.domOf(mi)) != ii) continue;
    keep.push_back(mi);
    raw.morphisms.push_back(tot.mor(mi));
  }
  for (int f : keep)
    for (int g : keep)
      if (tot.codOf(f) == tot.domOf(g)) {
        const int r = tot.composeIdx(f, g);
        raw.composition.push_back({tot.mor(f).name, tot.mor(g).name, tot.mor(r).name});
      }
  auto cat = FinCat::mustValidate(raw);
  std::map<std::string, std::string> om, mm;
  for (const auto& o : cat->objects()) om[o] = o;
  for (const auto& m : cat->morphisms())
    if (!cat->isIdentity(cat->morIndex(m.name))) mm[m.name] = m.name;
  return {cat, Functor::validate("incl(" + raw.name + ")", cat, p.source(), om, mm)};
}

VerticalCatResult verticalCategory(const Functor& p) {
  auto ac = buildArrowCategory(p.source());
  std::vector<std::string> vertical;
  for (const auto& m : p.source()->morphisms())
    if (isVertical(p, m.name)) vertical.push_back(m.name);
  auto sub = fullSubcategory(ac.carrier, vertical, "V(" + p.name() + ")");
  return {sub.cat, composeFunctors(sub.inclusion, ac.codFunctor),
          composeFunctors(sub.inclusion, ac.domFunctor), sub.inclusion, ac};
}

Functor reindexingFunctor(const CleavedFibration& p, const std::string& u) {
  const FinCat& tot = *p.total();
  const FinCat& base = *p.base();
  const int ui = base.requireMor(u);
  const std::string i = base.objects()[base.codOf(ui)];
  const std::string j = base.objects()[base.domOf(ui)];
  auto fibI = fiberCategory(p.proj, i);
  auto fibJ = fiberCategory(p.proj, j);
  std::map<std::string, std::string> om, mm;
  for (const auto& y : fibI.cat->objects())
    om[y] = tot.objects()[tot.domOf(p.cleavage.at({tot.requireObject(y), ui}))];
  for (const auto& m : fibI.cat->morphisms()) {
    if (fibI.cat->isIdentity(fibI.cat->morIndex(m.name))) continue;
    // u*f is the unique vertical filler h with lift(cod) ∘ h = f ∘ lift(dom).
    const int liftDom = p.cleavage.at({tot.requireObject(m.dom), ui});
    const int liftCod = p.cleavage.at({tot.requireObject(m.cod), ui});
    const int rhs = tot.composeIdx(liftDom, tot.requireMor(m.name));
    int filler = -1;
    for (int h : tot.hom(tot.domOf(liftDom), tot.domOf(liftCod)))
      if (p.proj.target()->isIdentity(p.proj.morAt(h)) &&
          tot.composeIdx(h, liftCod) == rhs) {
        filler = h;
        break;
      }
    if (filler < 0)
      throw CatError("ShapeMismatch", "reindexing has no vertical filler for " + m.name);
    mm[m.name] = tot.mor(filler).name;
  }
  return Functor::validate(u + "*", fibI.cat, fibJ.cat, om, mm);
}

FiberedPullbacksResult hasFiberedPullbacks(const CleavedFibration& p) {
  const FinCat& base = *p.base();
  // Each fiber must have pullbacks.
  std::map<std::string, FiberResult> fibers;
  for (const auto& i : base.objects()) {
    auto fib = fiberCategory(p.proj, i);
    auto hp = hasPullbacks(fib.cat);
    if (!hp.ok)
      return {false,
              {{"fiber", i},
               {"cospan", {hp.counterexample->f, hp.counterexample->g}}}};
    fibers.emplace(i, std::move(fib));
  }
  // Reindexing must carry the canonical fiber pullbacks to pullbacks.
  for (const auto& u : base.morphisms()) {
    if (base.isIdentity(base.morIndex(u.name))) continue;
    auto ru = reindexingFunctor(p, u.name);
    const CatPtr& fibI = ru.source();
    const CatPtr& fibJ = ru.target();
    for (const auto& f : fibI->morphisms())
      for (const auto& g : fibI->morphisms()) {
        if (f.cod != g.cod) continue;
        auto pb = pullback(fibI, f.name, g.name);
        Cone image{ru.applyObj(pb->cone.apex), ru.applyMor(pb->cone.leg1),
                   ru.applyMor(pb->cone.leg2)};
        if (!isTerminalCone(fibJ, ru.applyMor(f.name), ru.applyMor(g.name), image))
          return {false,
                  {{"base_morphism", u.name}, {"cospan", {f.name, g.name}}}};
      }
  }
  return {true, json::object()};
}

ChangeOfBaseResult changeOfBase(const CleavedFibration& p, const Functor& f) {
  if (!(*f.target() == *p.base()))
    throw CatError("ShapeMismatch", "change of base: target of " + f.name() +
                                        " is not the base of " + p.proj.name());
  const FinCat& tot = *p.total();
  const FinCat& c = *f.source();
  RawCategory raw;
  raw.name = "(" + c.name() + "x_" + p.base()->name() + tot.name() + ")";
  for (std::size_t a = 0; a < c.numObjects(); ++a)
    for (std::size_t x = 0; x < tot.numObjects(); ++x)
      if (f.objAt(static_cast<int>(a)) == p.proj.objAt(static_cast<int>(x)))
        raw.objects.push_back(pairName(c.objects()[a], tot.objects()[x]));
  auto mname = [&](int u, int g) {
    if (c.isIdentity(u) && tot.isIdentity(g))
      return "id:" + pairName(c.objects()[c.domOf(u)], tot.objects()[tot.domOf(g)]);
    return pairName(c.mor(u).name, tot.mor(g).name);
  };
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t u = 0; u < c.numMors(); ++u)
    for (std::size_t g = 0; g < tot.numMors(); ++g) {
      const int ui = static_cast<int>(u), gi = static_cast<int>(g);
      if (f.morAt(ui) != p.proj.morAt(gi)) continue;
      pairs.emplace_back(ui, gi);
      if (c.isIdentity(ui) && tot.isIdentity(gi)) continue;
      raw.morphisms.push_back({mname(ui, gi),
                               pairName(c.objects()[c.domOf(ui)],
                                        tot.objects()[tot.domOf(gi)]),
                               pairName(c.objects()[c.codOf(ui)],
                                        tot.objects()[tot.codOf(gi)])});
    }
  for (const auto& [u1, g1] : pairs)
    for (const auto& [u2, g2] : pairs) {
      if (c.isIdentity(u1) && tot.isIdentity(g1)) continue;
      if (c.isIdentity(u2) && tot.isIdentity(g2)) continue;
      if (c.codOf(u1) != c.domOf(u2) || tot.codOf(g1) != tot.domOf(g2)) continue;
      raw.composition.push_back({mname(u1, g1), mname(u2, g2),
                                 mname(c.composeIdx(u1, u2), tot.composeIdx(g1, g2))});
    }
  auto cat = FinCat::mustValidate(raw);
  std::map<std::string, std::string> pom, pmm, tom, tmm;
  for (const auto& [u, g] : pairs) {
    if (!(c.isIdentity(u) && tot.isIdentity(g))) {
      pmm[mname(u, g)] = c.mor(u).name;
      tmm[mname(u, g)] = tot.mor(g).name;
    }
  }
  for (std::size_t a = 0; a < c.numObjects(); ++a)
    for (std::size_t x = 0; x < tot.numObjects(); ++x)
      if (f.objAt(static_cast<int>(a)) == p.proj.objAt(static_cast<int>(x))) {
        const std::string nm = pairName(c.objects()[a], tot.objects()[x]);
        pom[nm] = c.objects()[a];
        tom[nm] = tot.objects()[x];
      }
  Functor proj = Functor::validate(p.proj.name() + "_" + f.name(), cat, f.source(),
                                   pom, pmm);
  Functor toTotal = Functor::validate("pr_" + tot.name(), cat, p.total(), tom, tmm);
  // Inherited cleavage: lift of u at (a, x) is (u, lift_p(x, f(u))); each
  // inherited lift is re-certified cartesian.
  CleavedFibration fib{proj, {}};
  for (const auto& y : cat->objects()) {
    const int yi = cat->objectIndex(y);
    const int a = f.source()->objectIndex(pom[y]);
    const int x = tot.objectIndex(tom[y]);
    for (std::size_t u = 0; u < c.numMors(); ++u) {
      const int ui = static_cast<int>(u);
      if (c.codOf(ui) != a) continue;
      const int lift = p.cleavage.at({x, f.morAt(ui)});
      const std::string liftName =
          c.isIdentity(ui) && tot.isIdentity(lift)
              ? "id:" + y
              : pairName(c.mor(ui).name, tot.mor(lift).name);
      const int li = cat->requireMor(liftName);
      auto cert = isCartesian(proj, liftName);
      if (!cert.ok)
        throw CatError("NotAFibration", "inherited lift is not cartesian", cert.witness);
      fib.cleavage[{yi, ui}] = li;
    }
  }
  return {std::move(fib), std::move(toTotal)};
}

std::variant<FiberedFunctorWitness, Violation>
isFiberedFunctor(const CleavedFibration& p, const CleavedFibration& q, const Functor& f) {
  if (!(*f.source() == *p.total()) || !(*f.target() == *q.total()))
    return Violation{"ShapeMismatch",
                     f.name() + " does not run between the total categories", {}};
  if (!(composeFunctors(f, q.proj) == p.proj))
    return Violation{"ProjectionMismatch",
                     "Q∘" + f.name() + " differs from P", {}};
  const auto pm = cartesianMask(p.proj);
  const auto qm = cartesianMask(q.proj);
  for (std::size_t m = 0; m < pm.size(); ++m)
    if (pm[m] && !qm[f.morAt(static_cast<int>(m))])
      return Violation{"CartesianNotPreserved",
                       f.name() + " breaks cartesianness",
                       {{"morphism", p.total()->mor(static_cast<int>(m)).name},
                        {"image", q.total()->mor(f.morAt(static_cast<int>(m))).name}}};
  return FiberedFunctorWitness{p.proj, q.proj, f};
}

FiberedFunctorWitness mustFiberedFunctor(const CleavedFibration& p,
                                         const CleavedFibration& q, const Functor& f) {
  auto res = isFiberedFunctor(p, q, f);
  if (auto* v = std::get_if<Violation>(&res))
    throw CatError(v->kind, v->message, v->witness);
  return std::get<FiberedFunctorWitness>(std::move(res));
}

FiberedNatTransCheck isFiberedNatTrans(const FiberedFunctorWitness& f,
                                       const FiberedFunctorWitness& g,
                                       const NatTrans& gamma) {
  if (!(gamma.source() == f.functor) || !(gamma.target() == g.functor))
    return {false, {{"kind", "ShapeMismatch"}}};
  for (std::size_t x = 0; x < f.functor.source()->numObjects(); ++x) {
    const std::string comp = f.functor.target()->mor(gamma.componentAt(static_cast<int>(x))).name;
    if (!isVertical(f.q, comp))
      return {false,
              {{"kind", "NonVerticalComponent"},
               {"object", f.functor.source()->objects()[x]},
               {"component", comp}}};
  }
  return {true, json::object()};
}

std::variant<FiberedAdjunctionWitness, Violation>
isFiberedAdjunction(const CleavedFibration& p, const CleavedFibration& q,
                    const Functor& left, const Functor& right, const NatTrans& unit,
                    const NatTrans& counit) {
  auto lw = isFiberedFunctor(p, q, left);
  if (auto* v = std::get_if<Violation>(&lw)) return *v;
  auto rw = isFiberedFunctor(q, p, right);
  if (auto* v = std::get_if<Violation>(&rw)) return *v;
  std::optional<Adjunction> adj;
  try {
    adj.emplace(checkAdjunction(left, right, unit, counit));
  } catch (const CatError& e) {
    return Violation{e.kind, e.what(), e.witness};
  }
  // Unit components are P-vertical, counit components Q-vertical.
  for (std::size_t x = 0; x < p.total()->numObjects(); ++x) {
    const std::string comp = p.total()->mor(unit.componentAt(static_cast<int>(x))).name;
    if (!isVertical(p.proj, comp))
      return Violation{"NonVerticalComponent", "unit component is not vertical",
                       {{"object", p.total()->objects()[x]}, {"component", comp}}};
  }
  for (std::size_t x = 0; x < q.total()->numObjects(); ++x) {
    const std::string comp = q.total()->mor(counit.componentAt(static_cast<int>(x))).name;
    if (!isVertical(q.proj, comp))
      return Violation{"NonVerticalComponent", "counit component is not vertical",
                       {{"object", q.total()->objects()[x]}, {"component", comp}}};
  }
  return FiberedAdjunctionWitness{*std::move(adj),
                                  std::get<FiberedFunctorWitness>(std::move(lw)),
                                  std::get<FiberedFunctorWitness>(std::move(rw))};
}

CleavedFibration codFibration(const ArrowCat& ac) { return mustFibration(ac.codFunctor); }
CleavedFibration domFibration(const ArrowCat& ac) { return mustFibration(ac.domFunctor); }

CleavedFibration identityFibration(const CatPtr& c) {
  return mustFibration(identityFunctor(c));
}

CleavedFibration bangFibration(const CatPtr& c) {
  auto one = FinCat::mustValidate({"One", {"pt"}, {}, {}});
  std::map<std::string, std::string> om, mm;
  for (const auto& o : c->objects()) om[o] = "pt";
  for (const auto& m : c->morphisms())
    if (!c->isIdentity(c->morIndex(m.name))) mm[m.name] = "id:pt";
  return mustFibration(Functor::validate("!_" + c->name(), c, one, om, mm));
}

CleavedFibration pi1Fibration(const ProductResult& pr) {
  return mustFibration(pr.proj1);
}

}  // namespace catfib
