#include "catfib/constructions.hpp"

namespace catfib {

std::string sliceMorName(const std::string& g, const std::string& e) {
  return g + "|" + e;
}

namespace {

/// Carrier name of the slice morphism underlying g toward edge e; the
/// identity of object `obj` when g is the base identity.
std::string sliceImage(const FinCat& base, int g, const std::string& e,
                       const std::string& obj) {
  if (base.isIdentity(g)) return "id:" + obj;
  return sliceMorName(base.mor(g).name, e);
}

}  // namespace

SliceCat buildSlice(const CatPtr& c, const std::string& a) {
  const int ai = c->requireObject(a);
  RawCategory raw;
  raw.name = c->name() + "/" + a;
  std::vector<int> objs;  // base morphism indices with cod = a
  for (std::size_t m = 0; m < c->numMors(); ++m)
    if (c->codOf(static_cast<int>(m)) == ai) {
      objs.push_back(static_cast<int>(m));
      raw.objects.push_back(c->mor(static_cast<int>(m)).name);
    }
  // A morphism x→y is a base g with y∘g = x; determined by (g, y).
  struct Tri {
    int g, x, y;
  };
  std::vector<Tri> tris;
  for (int x : objs)
    for (int y : objs)
      for (int g : c->hom(c->domOf(x), c->domOf(y)))
        if (c->composeIdx(g, y) == x && !c->isIdentity(g)) {
          tris.push_back({g, x, y});
          raw.morphisms.push_back(
              {sliceMorName(c->mor(g).name, c->mor(y).name), c->mor(x).name, c->mor(y).name});
        }
  for (const Tri& t1 : tris)
    for (const Tri& t2 : tris) {
      if (t1.y != t2.x) continue;
      const int comp = c->composeIdx(t1.g, t2.g);
      raw.composition.push_back(
          {sliceMorName(c->mor(t1.g).name, c->mor(t1.y).name),
           sliceMorName(c->mor(t2.g).name, c->mor(t2.y).name),
           sliceImage(*c, comp, c->mor(t2.y).name, c->mor(t1.x).name)});
    }
  CatPtr carrier = FinCat::mustValidate(raw);
  std::map<std::string, std::string> om, mm;
  for (int x : objs) om[c->mor(x).name] = c->objects()[c->domOf(x)];
  for (const Tri& t : tris)
    mm[sliceMorName(c->mor(t.g).name, c->mor(t.y).name)] = c->mor(t.g).name;
  Functor proj = Functor::validate("sigma:" + raw.name, carrier, c, om, mm);
  return {c, a, carrier, std::move(proj)};
}

SliceCat buildOpslice(const CatPtr& c, const std::string& i) {
  const int ii = c->requireObject(i);
  RawCategory raw;
  raw.name = i + "\\" + c->name();
  std::vector<int> objs;  // base morphisms with dom = i
  for (std::size_t m = 0; m < c->numMors(); ++m)
    if (c->domOf(static_cast<int>(m)) == ii) {
      objs.push_back(static_cast<int>(m));
      raw.objects.push_back(c->mor(static_cast<int>(m)).name);
    }
  // A morphism x→y is a base g with g∘x = y; determined by (g, x).
  struct Tri {
    int g, x, y;
  };
  std::vector<Tri> tris;
  for (int x : objs)
    for (int y : objs)
      for (int g : c->hom(c->codOf(x), c->codOf(y)))
        if (c->composeIdx(x, g) == y && !c->isIdentity(g)) {
          tris.push_back({g, x, y});
          raw.morphisms.push_back(
              {sliceMorName(c->mor(g).name, c->mor(x).name), c->mor(x).name, c->mor(y).name});
        }
  for (const Tri& t1 : tris)
    for (const Tri& t2 : tris) {
      if (t1.y != t2.x) continue;
      const int comp = c->composeIdx(t1.g, t2.g);
      raw.composition.push_back({sliceMorName(c->mor(t1.g).name, c->mor(t1.x).name),
                                 sliceMorName(c->mor(t2.g).name, c->mor(t2.x).name),
                                 sliceImage(*c, comp, c->mor(t1.x).name, c->mor(t1.x).name)});
    }
  CatPtr carrier = FinCat::mustValidate(raw);
  std::map<std::string, std::string> om, mm;
  for (int x : objs) om[c->mor(x).name] = c->objects()[c->codOf(x)];
  for (const Tri& t : tris)
    mm[sliceMorName(c->mor(t.g).name, c->mor(t.x).name)] = c->mor(t.g).name;
  Functor proj = Functor::validate("sigma:" + raw.name, carrier, c, om, mm);
  return {c, i, carrier, std::move(proj)};
}

namespace {

std::string squareBody(const FinCat& c, int top, int bottom, int x, int y) {
  return pairName(c.mor(top).name, c.mor(bottom).name) + "|" + c.mor(x).name + "|" +
         c.mor(y).name;
}

/// Arrow-category name of the square (top,bottom): x→y; the identity of
/// object x when it is the identity square.
std::string squareImage(const FinCat& c, int top, int bottom, int x, int y) {
  if (c.isIdentity(top) && c.isIdentity(bottom) && x == y) return "id:" + c.mor(x).name;
  return squareBody(c, top, bottom, x, y);
}

}  // namespace

ArrowCat buildArrowCategory(const CatPtr& c) {
  RawCategory raw;
  raw.name = c->name() + "->";
  const int nm = static_cast<int>(c->numMors());
  for (int m = 0; m < nm; ++m) raw.objects.push_back(c->mor(m).name);
  struct Sq {
    int top, bottom, x, y;
  };
  std::vector<Sq> sqs;
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y)
      for (int top : c->hom(c->domOf(x), c->domOf(y)))
        for (int bottom : c->hom(c->codOf(x), c->codOf(y)))
          if (c->composeIdx(top, y) == c->composeIdx(x, bottom)) {
            if (c->isIdentity(top) && c->isIdentity(bottom) && x == y) continue;
            sqs.push_back({top, bottom, x, y});
            raw.morphisms.push_back(
                {squareBody(*c, top, bottom, x, y), c->mor(x).name, c->mor(y).name});
          }
  for (const Sq& s1 : sqs)
    for (const Sq& s2 : sqs) {
      if (s1.y != s2.x) continue;
      const int t = c->composeIdx(s1.top, s2.top);
      const int b = c->composeIdx(s1.bottom, s2.bottom);
      raw.composition.push_back({squareBody(*c, s1.top, s1.bottom, s1.x, s1.y),
                                 squareBody(*c, s2.top, s2.bottom, s2.x, s2.y),
                                 squareImage(*c, t, b, s1.x, s2.y)});
    }
  CatPtr carrier = FinCat::mustValidate(raw);
  std::map<std::string, std::string> omd, mmd, omc, mmc;
  for (int m = 0; m < nm; ++m) {
    omd[c->mor(m).name] = c->objects()[c->domOf(m)];
    omc[c->mor(m).name] = c->objects()[c->codOf(m)];
  }
  for (const Sq& s : sqs) {
    mmd[squareBody(*c, s.top, s.bottom, s.x, s.y)] = c->mor(s.top).name;
    mmc[squareBody(*c, s.top, s.bottom, s.x, s.y)] = c->mor(s.bottom).name;
  }
  Functor domF = Functor::validate("dom:" + c->name(), carrier, c, omd, mmd);
  Functor codF = Functor::validate("cod:" + c->name(), carrier, c, omc, mmc);
  return {c, carrier, std::move(domF), std::move(codF)};
}

Functor sigmaF(const CatPtr& c, const std::string& f) {
  const int fi = c->requireMor(f);
  const std::string a = c->objects()[c->domOf(fi)];
  const std::string b = c->objects()[c->codOf(fi)];
  SliceCat sa = buildSlice(c, a);
  SliceCat sb = buildSlice(c, b);
  std::map<std::string, std::string> om, mm;
  for (const auto& xn : sa.carrier->objects()) {
    const int x = c->requireMor(xn);
    om[xn] = c->mor(c->composeIdx(x, fi)).name;
  }
  for (const auto& m : sa.carrier->morphisms()) {
    const int mi = sa.carrier->morIndex(m.name);
    if (sa.carrier->isIdentity(mi)) continue;
    const int g = c->requireMor(sa.proj.applyMor(m.name));
    const int y = c->requireMor(m.cod);  // carrier object name = base morphism
    mm[m.name] = sliceMorName(c->mor(g).name, c->mor(c->composeIdx(y, fi)).name);
  }
  return Functor::validate("Sigma_" + f, sa.carrier, sb.carrier, om, mm);
}

Functor sliceFunctor(const Functor& f, const std::string& a) {
  const CatPtr& c = f.source();
  SliceCat sa = buildSlice(c, a);
  SliceCat sfa = buildSlice(f.target(), f.applyObj(a));
  const FinCat& d = *f.target();
  std::map<std::string, std::string> om, mm;
  for (const auto& xn : sa.carrier->objects()) om[xn] = f.applyMor(xn);
  for (const auto& m : sa.carrier->morphisms()) {
    const int mi = sa.carrier->morIndex(m.name);
    if (sa.carrier->isIdentity(mi)) continue;
    const int fg = d.requireMor(f.applyMor(sa.proj.applyMor(m.name)));
    const std::string fy = f.applyMor(m.cod);
    mm[m.name] = sliceImage(d, fg, fy, f.applyMor(m.dom));
  }
  return Functor::validate(f.name() + "/" + a, sa.carrier, sfa.carrier, om, mm);
}

namespace {

PullbackResult requirePullback(const CatPtr& c, const std::string& f,
                               const std::string& g) {
  auto pb = pullback(c, f, g);
  if (!pb)
    throw CatError("MissingPullback", "no pullback of the cospan (" + f + ", " + g + ")",
                   {{"f", f}, {"g", g}});
  return *pb;
}

}  // namespace

Functor reindex(const CatPtr& c, const std::string& f) {
  const int fi = c->requireMor(f);
  const std::string a = c->objects()[c->domOf(fi)];
  const std::string b = c->objects()[c->codOf(fi)];
  SliceCat sb = buildSlice(c, b);
  SliceCat sa = buildSlice(c, a);
  // Canonical pullback data per object y of C/B.
  std::map<std::string, PullbackResult> pbs;
  for (const auto& yn : sb.carrier->objects()) pbs.emplace(yn, requirePullback(c, yn, f));
  std::map<std::string, std::string> om, mm;
  for (const auto& yn : sb.carrier->objects()) om[yn] = pbs.at(yn).cone.leg2;
  for (const auto& m : sb.carrier->morphisms()) {
    const int mi = sb.carrier->morIndex(m.name);
    if (sb.carrier->isIdentity(mi)) continue;
    const std::string g = sb.proj.applyMor(m.name);  // g: Y1 → Y2, y2∘g = y1
    const PullbackResult& p1 = pbs.at(m.dom);
    const PullbackResult& p2 = pbs.at(m.cod);
    // Mediate the cone (P1; g∘leg1, leg2) into the pullback of (y2, f).
    Cone cone{p1.cone.apex, c->composeName(p1.cone.leg1, g), p1.cone.leg2};
    const std::string h = mediatingMorphism(c, p2, cone);
    mm[m.name] = sliceImage(*c, c->requireMor(h), p2.cone.leg2, p1.cone.leg2);
  }
  return Functor::validate(f + "*", sb.carrier, sa.carrier, om, mm);
}

Adjunction checkAdjunction(const Functor& left, const Functor& right,
                           const NatTrans& unit, const NatTrans& counit) {
  if (!(*left.target() == *right.source()) || !(*right.target() == *left.source()))
    throw CatError("ShapeMismatch", "adjunction: functors are not opposed");
  if (!(unit.source() == identityFunctor(left.source())) ||
      !(unit.target() == composeFunctors(left, right)))
    throw CatError("ShapeMismatch", "adjunction: unit is not 1 ⇒ right∘left");
  if (!(counit.source() == composeFunctors(right, left)) ||
      !(counit.target() == identityFunctor(right.source())))
    throw CatError("ShapeMismatch", "adjunction: counit is not left∘right ⇒ 1");
  const FinCat& x = *left.source();
  const FinCat& y = *left.target();
  // (ε left) ∘ (left η) = 1_left, componentwise over objects of the source.
  for (std::size_t o = 0; o < x.numObjects(); ++o) {
    const int io = static_cast<int>(o);
    const int lhs = y.composeIdx(left.morAt(unit.componentAt(io)),
                                 counit.componentAt(left.objAt(io)));
    if (lhs != y.identityOf(left.objAt(io)))
      throw CatError("TriangleIdentityViolation",
                     "(ε left)∘(left η) ≠ 1 at '" + x.objects()[o] + "'",
                     {{"object", x.objects()[o]}});
  }
  // (right ε) ∘ (η right) = 1_right, componentwise over objects of the target.
  for (std::size_t o = 0; o < y.numObjects(); ++o) {
    const int io = static_cast<int>(o);
    const int lhs = x.composeIdx(unit.componentAt(right.objAt(io)),
                                 right.morAt(counit.componentAt(io)));
    if (lhs != x.identityOf(right.objAt(io)))
      throw CatError("TriangleIdentityViolation",
                     "(right ε)∘(η right) ≠ 1 at '" + y.objects()[o] + "'",
                     {{"object", y.objects()[o]}});
  }
  return {left, right, unit, counit};
}

Adjunction adjunctionSigmaReindex(const CatPtr& c, const std::string& f) {
  Functor sig = sigmaF(c, f);
  Functor rdx = reindex(c, f);
  const CatPtr& sliceA = sig.source();
  const CatPtr& sliceB = rdx.source();
  const int fi = c->requireMor(f);

  std::map<std::string, PullbackResult> pbs;
  for (const auto& yn : sliceB->objects()) pbs.emplace(yn, requirePullback(c, yn, f));

  // Unit at x: X→A mediates the cone (X; 1_X, x) into the pullback of (f∘x, f).
  std::map<std::string, std::string> unitComps;
  for (const auto& xn : sliceA->objects()) {
    const int x = c->requireMor(xn);
    const std::string fx = c->mor(c->composeIdx(x, fi)).name;
    const PullbackResult& pb = pbs.at(fx);
    Cone cone{c->objects()[c->domOf(x)], "id:" + c->objects()[c->domOf(x)], xn};
    const std::string h = mediatingMorphism(c, pb, cone);
    unitComps[xn] = sliceImage(*c, c->requireMor(h), pb.cone.leg2, xn);
  }
  NatTrans unit = NatTrans::validate("eta:Sigma_" + f, identityFunctor(sliceA),
                                     composeFunctors(sig, rdx), unitComps);

  // Counit at y: Y→B is the first pullback projection v1: V→Y.
  std::map<std::string, std::string> counitComps;
  for (const auto& yn : sliceB->objects()) {
    const PullbackResult& pb = pbs.at(yn);
    const int v1 = c->requireMor(pb.cone.leg1);
    const int v2 = c->requireMor(pb.cone.leg2);
    const std::string fv2 = c->mor(c->composeIdx(v2, fi)).name;
    counitComps[yn] = sliceImage(*c, v1, yn, fv2);
  }
  NatTrans counit = NatTrans::validate("eps:Sigma_" + f, composeFunctors(rdx, sig),
                                       identityFunctor(sliceB), counitComps);
  return checkAdjunction(sig, rdx, unit, counit);
}

FunctorPair sliceOfSliceIso(const CatPtr& c, const std::string& f) {
  const int fi = c->requireMor(f);
  const std::string a = c->objects()[c->domOf(fi)];
  SliceCat sb = buildSlice(c, c->objects()[c->codOf(fi)]);
  SliceCat ss = buildSlice(sb.carrier, f);
  SliceCat sa = buildSlice(c, a);

  // Forward: apply the slice projection at both levels.
  std::map<std::string, std::string> fom, fmm;
  for (const auto& on : ss.carrier->objects()) fom[on] = sb.proj.applyMor(on);
  for (const auto& m : ss.carrier->morphisms()) {
    const int mi = ss.carrier->morIndex(m.name);
    if (ss.carrier->isIdentity(mi)) continue;
    const std::string t = sb.proj.applyMor(ss.proj.applyMor(m.name));
    const std::string g2 = sb.proj.applyMor(m.cod);
    fmm[m.name] = sliceImage(*c, c->requireMor(t), g2, sb.proj.applyMor(m.dom));
  }
  Functor fwd = Functor::validate("flatten:" + ss.carrier->name(), ss.carrier,
                                  sa.carrier, fom, fmm);

  // Backward: g ↦ the triangle g: f∘g → f.
  std::map<std::string, std::string> bom, bmm;
  for (const auto& gn : sa.carrier->objects()) {
    const int g = c->requireMor(gn);
    bom[gn] = sliceImage(*c, g, f, c->mor(c->composeIdx(g, fi)).name);
  }
  for (const auto& m : sa.carrier->morphisms()) {
    const int mi = sa.carrier->morIndex(m.name);
    if (sa.carrier->isIdentity(mi)) continue;
    const std::string t = sa.proj.applyMor(m.name);
    const int g2 = c->requireMor(m.cod);
    const std::string x2 = c->mor(c->composeIdx(g2, fi)).name;
    const std::string inner = sliceMorName(t, x2);  // t is never an identity here
    bmm[m.name] = sliceMorName(inner, bom.at(m.cod));
  }
  Functor bwd = Functor::validate("nest:" + sa.carrier->name(), sa.carrier,
                                  ss.carrier, bom, bmm);

  if (!(composeFunctors(fwd, bwd) == identityFunctor(ss.carrier)) ||
      !(composeFunctors(bwd, fwd) == identityFunctor(sa.carrier)))
    throw CatError("InvalidFunctor", "slice-of-slice comparison failed to invert");
  return {std::move(fwd), std::move(bwd)};
}

EquivCert sliceTerminalEquiv(const CatPtr& c) {
  auto t = terminalObject(c);
  if (!t)
    throw CatError("NoTerminalObject", "category '" + c->name() + "' has no terminal object");
  SliceCat s = buildSlice(c, *t);
  EquivalenceResult cert = checkEquivalence(s.proj);
  return {s.proj, std::move(cert)};
}

}  // namespace catfib
