#include "catfib/fincat.hpp"

#include <algorithm>
#include <set>

namespace catfib {

const std::vector<int> FinCat::emptyHom_{};

namespace {

constexpr const char* kIdPrefix = "id:";

bool hasIdPrefix(const std::string& s) { return s.rfind(kIdPrefix, 0) == 0; }

}  // namespace

std::variant<CatPtr, std::vector<Violation>> FinCat::validate(const RawCategory& raw) {
  std::vector<Violation> bad;

  std::set<std::string> objSet;
  for (const auto& o : raw.objects) {
    if (o.empty())
      bad.push_back({"DuplicateName", "empty object name", {{"object", o}}});
    else if (!objSet.insert(o).second)
      bad.push_back({"DuplicateName", "duplicate object '" + o + "'", {{"object", o}}});
  }
  std::set<std::string> morSet;
  for (const auto& m : raw.morphisms) {
    if (hasIdPrefix(m.name))
      bad.push_back({"DuplicateName",
                     "morphism name '" + m.name + "' uses the reserved 'id:' prefix",
                     {{"morphism", m.name}}});
    else if (m.name.empty() || !morSet.insert(m.name).second)
      bad.push_back({"DuplicateName", "duplicate morphism '" + m.name + "'",
                     {{"morphism", m.name}}});
    if (!objSet.count(m.dom))
      bad.push_back({"DanglingReference",
                     "morphism '" + m.name + "' has unknown dom '" + m.dom + "'",
                     {{"morphism", m.name}, {"dom", m.dom}}});
    if (!objSet.count(m.cod))
      bad.push_back({"DanglingReference",
                     "morphism '" + m.name + "' has unknown cod '" + m.cod + "'",
                     {{"morphism", m.name}, {"cod", m.cod}}});
  }
  if (!bad.empty()) return bad;

  auto cat = std::shared_ptr<FinCat>(new FinCat());
  cat->name_ = raw.name;
  cat->objects_ = raw.objects;
  std::sort(cat->objects_.begin(), cat->objects_.end());
  cat->mors_ = raw.morphisms;
  for (const auto& o : cat->objects_)
    cat->mors_.push_back({kIdPrefix + o, o, o});
  std::sort(cat->mors_.begin(), cat->mors_.end(),
            [](const MorData& a, const MorData& b) { return a.name < b.name; });

  const int no = static_cast<int>(cat->objects_.size());
  const int nm = static_cast<int>(cat->mors_.size());
  for (int i = 0; i < no; ++i) cat->objIndex_[cat->objects_[i]] = i;
  for (int i = 0; i < nm; ++i) cat->morIndex_[cat->mors_[i].name] = i;
  cat->morDom_.resize(nm);
  cat->morCod_.resize(nm);
  for (int i = 0; i < nm; ++i) {
    cat->morDom_[i] = cat->objIndex_[cat->mors_[i].dom];
    cat->morCod_[i] = cat->objIndex_[cat->mors_[i].cod];
  }
  cat->identity_.resize(no);
  for (int i = 0; i < no; ++i)
    cat->identity_[i] = cat->morIndex_[kIdPrefix + cat->objects_[i]];
  for (int i = 0; i < nm; ++i)
    cat->homs_[{cat->morDom_[i], cat->morCod_[i]}].push_back(i);

  // Composition table: identity entries synthesized, the rest from raw.
  cat->table_.assign(static_cast<std::size_t>(nm) * nm, -1);
  auto slot = [&](int f, int g) -> int& {
    return cat->table_[static_cast<std::size_t>(f) * nm + g];
  };
  for (int f = 0; f < nm; ++f) {
    slot(cat->identity_[cat->morDom_[f]], f) = f;  // f ∘ id = f
    slot(f, cat->identity_[cat->morCod_[f]]) = f;  // id ∘ f = f
  }
  for (const auto& [first, second, result] : raw.composition) {
    auto fi = cat->morIndex_.find(first);
    auto gi = cat->morIndex_.find(second);
    auto ri = cat->morIndex_.find(result);
    bool dangling = false;
    for (const auto& [label, it] :
         {std::pair{"first", &fi}, {"second", &gi}, {"result", &ri}}) {
      if (*it == cat->morIndex_.end()) {
        bad.push_back({"DanglingReference",
                       std::string("composition entry references unknown morphism (") +
                           label + ")",
                       {{"first", first}, {"second", second}, {"result", result}}});
        dangling = true;
      }
    }
    if (dangling) continue;
    int f = fi->second, g = gi->second, r = ri->second;
    if (cat->isIdentity(f) || cat->isIdentity(g)) {
      bad.push_back({"DanglingReference",
                     "composition entries may not mention identities",
                     {{"first", first}, {"second", second}}});
      continue;
    }
    if (cat->morCod_[f] != cat->morDom_[g]) {
      bad.push_back({"NotClosed",
                     "entry composes non-composable pair " + first + " then " + second,
                     {{"first", first}, {"second", second}}});
      continue;
    }
    if (cat->morDom_[r] != cat->morDom_[f] || cat->morCod_[r] != cat->morCod_[g]) {
      bad.push_back({"NotClosed",
                     "result '" + result + "' of " + second + "∘" + first +
                         " has wrong dom/cod",
                     {{"first", first}, {"second", second}, {"result", result}}});
      continue;
    }
    int& s = slot(f, g);
    if (s != -1 && s != r) {
      bad.push_back({"DuplicateName",
                     "conflicting composition entries for " + second + "∘" + first,
                     {{"first", first}, {"second", second}}});
      continue;
    }
    s = r;
  }
  if (!bad.empty()) return bad;

  // Totality over non-identity composable pairs.
  for (int f = 0; f < nm; ++f) {
    if (cat->isIdentity(f)) continue;
    for (int g = 0; g < nm; ++g) {
      if (cat->isIdentity(g) || cat->morCod_[f] != cat->morDom_[g]) continue;
      if (slot(f, g) == -1)
        bad.push_back({"NonTotal",
                       "missing composite " + cat->mors_[g].name + "∘" + cat->mors_[f].name,
                       {{"first", cat->mors_[f].name}, {"second", cat->mors_[g].name}}});
    }
  }
  if (!bad.empty()) return bad;

  // Identity laws hold by construction of the synthesized entries; check
  // associativity over every composable triple.
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (cat->morCod_[f] != cat->morDom_[g]) continue;
      const int gf = slot(f, g);
      for (int h = 0; h < nm; ++h) {
        if (cat->morCod_[g] != cat->morDom_[h]) continue;
        const int hg = slot(g, h);
        if (slot(gf, h) != slot(f, hg)) {
          bad.push_back({"AssociativityViolation",
                         "h∘(g∘f) ≠ (h∘g)∘f for (f,g,h) = (" + cat->mors_[f].name + "," +
                             cat->mors_[g].name + "," + cat->mors_[h].name + ")",
                         {{"f", cat->mors_[f].name},
                          {"g", cat->mors_[g].name},
                          {"h", cat->mors_[h].name}}});
        }
      }
    }
  if (!bad.empty()) return bad;

  return CatPtr(cat);
}

CatPtr FinCat::mustValidate(const RawCategory& raw) {
  auto r = validate(raw);
  if (auto* c = std::get_if<CatPtr>(&r)) return *c;
  const auto& v = std::get<std::vector<Violation>>(r);
  json w = json::array();
  for (const auto& x : v) w.push_back({{"kind", x.kind}, {"message", x.message}, {"witness", x.witness}});
  throw CatError("InvalidCategory",
                 "category '" + raw.name + "': " + (v.empty() ? "" : v.front().message), w);
}

std::variant<CatPtr, std::vector<Violation>> validateCategory(const RawCategory& raw) {
  return FinCat::validate(raw);
}

int FinCat::objectIndex(const std::string& name) const {
  auto it = objIndex_.find(name);
  return it == objIndex_.end() ? -1 : it->second;
}

int FinCat::morIndex(const std::string& name) const {
  auto it = morIndex_.find(name);
  return it == morIndex_.end() ? -1 : it->second;
}

int FinCat::requireObject(const std::string& name) const {
  int i = objectIndex(name);
  if (i < 0)
    throw CatError("UnknownObject", "no object '" + name + "' in category '" + name_ + "'");
  return i;
}

int FinCat::requireMor(const std::string& name) const {
  int i = morIndex(name);
  if (i < 0)
    throw CatError("UnknownMorphism",
                   "no morphism '" + name + "' in category '" + name_ + "'");
  return i;
}

std::string FinCat::composeName(const std::string& f, const std::string& g) const {
  const int fi = requireMor(f), gi = requireMor(g);
  const int r = composeIdx(fi, gi);
  if (r < 0)
    throw CatError("NotComposable", "cod(" + f + ") ≠ dom(" + g + ")",
                   {{"first", f}, {"second", g}});
  return mors_[r].name;
}

const std::vector<int>& FinCat::hom(int domObj, int codObj) const {
  auto it = homs_.find({domObj, codObj});
  return it == homs_.end() ? emptyHom_ : it->second;
}

bool FinCat::isIso(int m) const {
  const int d = domOf(m), c = codOf(m);
  for (int g : hom(c, d))
    if (composeIdx(m, g) == identityOf(d) && composeIdx(g, m) == identityOf(c)) return true;
  return false;
}

RawCategory FinCat::toRaw() const {
  RawCategory raw;
  raw.name = name_;
  raw.objects = objects_;
  for (const auto& m : mors_)
    if (!isIdentity(morIndex_.at(m.name))) raw.morphisms.push_back(m);
  const int nm = static_cast<int>(mors_.size());
  for (int f = 0; f < nm; ++f) {
    if (isIdentity(f)) continue;
    for (int g = 0; g < nm; ++g) {
      if (isIdentity(g)) continue;
      const int r = composeIdx(f, g);
      if (r >= 0) raw.composition.push_back({mors_[f].name, mors_[g].name, mors_[r].name});
    }
  }
  return raw;
}

bool operator==(const FinCat& a, const FinCat& b) {
  if (a.objects_ != b.objects_) return false;
  if (a.mors_.size() != b.mors_.size()) return false;
  for (std::size_t i = 0; i < a.mors_.size(); ++i) {
    if (a.mors_[i].name != b.mors_[i].name || a.mors_[i].dom != b.mors_[i].dom ||
        a.mors_[i].cod != b.mors_[i].cod)
      return false;
  }
  return a.table_ == b.table_;
}

// ---- Functor ---------------------------------------------------------------

Functor Functor::validateIdx(std::string name, CatPtr source, CatPtr target,
                             std::vector<int> objMap, std::vector<int> morMap) {
  Functor f;
  f.name_ = std::move(name);
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.objMap_ = std::move(objMap);
  f.morMap_ = std::move(morMap);
  const FinCat& s = *f.source_;
  const FinCat& t = *f.target_;
  if (f.objMap_.size() != s.numObjects() || f.morMap_.size() != s.numMors())
    throw CatError("ShapeMismatch", "functor '" + f.name_ + "': incomplete maps");
  for (std::size_t m = 0; m < s.numMors(); ++m) {
    const int im = f.morMap_[m];
    if (im < 0 || im >= static_cast<int>(t.numMors()))
      throw CatError("ShapeMismatch", "functor '" + f.name_ + "': bad morphism image");
    if (t.domOf(im) != f.objMap_[s.domOf(static_cast<int>(m))] ||
        t.codOf(im) != f.objMap_[s.codOf(static_cast<int>(m))])
      throw CatError("InvalidFunctor",
                     "functor '" + f.name_ + "' breaks dom/cod at '" +
                         s.mor(static_cast<int>(m)).name + "'",
                     {{"morphism", s.mor(static_cast<int>(m)).name}});
  }
  for (std::size_t o = 0; o < s.numObjects(); ++o)
    if (f.morMap_[s.identityOf(static_cast<int>(o))] != t.identityOf(f.objMap_[o]))
      throw CatError("InvalidFunctor",
                     "functor '" + f.name_ + "' does not preserve the identity of '" +
                         s.objects()[o] + "'",
                     {{"object", s.objects()[o]}});
  const int nm = static_cast<int>(s.numMors());
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) {
      const int c = s.composeIdx(a, b);
      if (c < 0) continue;
      if (t.composeIdx(f.morMap_[a], f.morMap_[b]) != f.morMap_[c])
        throw CatError("InvalidFunctor",
                       "functor '" + f.name_ + "' breaks composition at (" +
                           s.mor(a).name + "," + s.mor(b).name + ")",
                       {{"first", s.mor(a).name}, {"second", s.mor(b).name}});
    }
  return f;
}

Functor Functor::validate(std::string name, CatPtr source, CatPtr target,
                          const std::map<std::string, std::string>& objectMap,
                          const std::map<std::string, std::string>& morphismMap) {
  std::vector<int> om(source->numObjects(), -1), mm(source->numMors(), -1);
  for (std::size_t o = 0; o < source->numObjects(); ++o) {
    auto it = objectMap.find(source->objects()[o]);
    if (it == objectMap.end())
      throw CatError("ShapeMismatch",
                     "functor '" + name + "': no image for object '" +
                         source->objects()[o] + "'");
    om[o] = target->requireObject(it->second);
  }
  for (std::size_t m = 0; m < source->numMors(); ++m) {
    const auto& md = source->mor(static_cast<int>(m));
    if (source->isIdentity(static_cast<int>(m))) {
      mm[m] = target->identityOf(om[source->domOf(static_cast<int>(m))]);
      continue;
    }
    auto it = morphismMap.find(md.name);
    if (it == morphismMap.end())
      throw CatError("ShapeMismatch",
                     "functor '" + name + "': no image for morphism '" + md.name + "'");
    mm[m] = target->requireMor(it->second);
  }
  return validateIdx(std::move(name), std::move(source), std::move(target), std::move(om),
                     std::move(mm));
}

std::string Functor::applyObj(const std::string& obj) const {
  return target_->objects()[objMap_[source_->requireObject(obj)]];
}

std::string Functor::applyMor(const std::string& mor) const {
  return target_->mor(morMap_[source_->requireMor(mor)]).name;
}

bool operator==(const Functor& a, const Functor& b) {
  return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.objMap_ == b.objMap_ &&
         a.morMap_ == b.morMap_;
}

// ---- NatTrans --------------------------------------------------------------

std::variant<NatTrans, Violation>
NatTrans::check(std::string name, const Functor& source, const Functor& target,
                const std::map<std::string, std::string>& components) {
  if (!(*source.source() == *target.source()) || !(*source.target() == *target.target()))
    throw CatError("ShapeMismatch",
                   "transformation '" + name + "': functors are not parallel");
  const FinCat& c = *source.source();
  const FinCat& d = *source.target();
  std::vector<int> comps(c.numObjects(), -1);
  for (std::size_t o = 0; o < c.numObjects(); ++o) {
    auto it = components.find(c.objects()[o]);
    if (it == components.end())
      return Violation{"MissingComponent", "no component at '" + c.objects()[o] + "'",
                       {{"object", c.objects()[o]}}};
    const int m = d.morIndex(it->second);
    if (m < 0 || d.domOf(m) != source.objAt(static_cast<int>(o)) ||
        d.codOf(m) != target.objAt(static_cast<int>(o)))
      return Violation{"MissingComponent",
                       "component at '" + c.objects()[o] + "' is not a morphism F(" +
                           c.objects()[o] + ") → G(" + c.objects()[o] + ")",
                       {{"object", c.objects()[o]}, {"component", it->second}}};
    comps[o] = m;
  }
  for (std::size_t m = 0; m < c.numMors(); ++m) {
    const int a = c.domOf(static_cast<int>(m)), b = c.codOf(static_cast<int>(m));
    // component_B ∘ F f  vs  G f ∘ component_A
    const int lhs = d.composeIdx(source.morAt(static_cast<int>(m)), comps[b]);
    const int rhs = d.composeIdx(comps[a], target.morAt(static_cast<int>(m)));
    if (lhs != rhs)
      return Violation{"NaturalitySquareViolation",
                       "square at '" + c.mor(static_cast<int>(m)).name + "' does not commute",
                       {{"morphism", c.mor(static_cast<int>(m)).name},
                        {"component_dom", d.mor(comps[a]).name},
                        {"component_cod", d.mor(comps[b]).name}}};
  }
  return NatTrans(std::move(name), source, target, std::move(comps));
}

NatTrans NatTrans::validate(std::string name, const Functor& source, const Functor& target,
                            const std::map<std::string, std::string>& components) {
  auto r = check(std::move(name), source, target, components);
  if (auto* n = std::get_if<NatTrans>(&r)) return std::move(*n);
  const auto& v = std::get<Violation>(r);
  throw CatError(v.kind, v.message, v.witness);
}

NatTrans NatTrans::validateIdx(std::string name, const Functor& source,
                               const Functor& target, std::vector<int> components) {
  const FinCat& c = *source.source();
  const FinCat& d = *source.target();
  std::map<std::string, std::string> comps;
  for (std::size_t o = 0; o < c.numObjects(); ++o)
    comps[c.objects()[o]] = d.mor(components[o]).name;
  return validate(std::move(name), source, target, comps);
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.components_ == b.components_;
}

// ---- algebra ---------------------------------------------------------------

Functor identityFunctor(const CatPtr& c) {
  std::vector<int> om(c->numObjects()), mm(c->numMors());
  for (std::size_t i = 0; i < om.size(); ++i) om[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < mm.size(); ++i) mm[i] = static_cast<int>(i);
  return Functor::validateIdx("1_" + c->name(), c, c, std::move(om), std::move(mm));
}

Functor composeFunctors(const Functor& first, const Functor& second) {
  if (!(*first.target() == *second.source()))
    throw CatError("ShapeMismatch", "functors '" + first.name() + "' and '" +
                                        second.name() + "' are not composable");
  std::vector<int> om(first.source()->numObjects()), mm(first.source()->numMors());
  for (std::size_t i = 0; i < om.size(); ++i)
    om[i] = second.objAt(first.objAt(static_cast<int>(i)));
  for (std::size_t i = 0; i < mm.size(); ++i)
    mm[i] = second.morAt(first.morAt(static_cast<int>(i)));
  return Functor::validateIdx(second.name() + "∘" + first.name(), first.source(),
                              second.target(), std::move(om), std::move(mm));
}

NatTrans whiskerLeft(const Functor& g, const NatTrans& alpha) {
  if (!(*alpha.source().target() == *g.source()))
    throw CatError("ShapeMismatch", "whiskerLeft: shapes do not match");
  std::vector<int> comps(alpha.source().source()->numObjects());
  for (std::size_t o = 0; o < comps.size(); ++o)
    comps[o] = g.morAt(alpha.componentAt(static_cast<int>(o)));
  return NatTrans::validateIdx(g.name() + alpha.name(),
                               composeFunctors(alpha.source(), g),
                               composeFunctors(alpha.target(), g), std::move(comps));
}

NatTrans whiskerRight(const NatTrans& gamma, const Functor& p) {
  if (!(*p.target() == *gamma.source().source()))
    throw CatError("ShapeMismatch", "whiskerRight: shapes do not match");
  std::vector<int> comps(p.source()->numObjects());
  for (std::size_t o = 0; o < comps.size(); ++o)
    comps[o] = gamma.componentAt(p.objAt(static_cast<int>(o)));
  return NatTrans::validateIdx(gamma.name() + p.name(),
                               composeFunctors(p, gamma.source()),
                               composeFunctors(p, gamma.target()), std::move(comps));
}

NatTrans verticalCompose(const NatTrans& beta, const NatTrans& alpha) {
  if (!(alpha.target() == beta.source()))
    throw CatError("ShapeMismatch", "verticalCompose: target of '" + alpha.name() +
                                        "' differs from source of '" + beta.name() + "'");
  const FinCat& d = *alpha.source().target();
  std::vector<int> comps(alpha.source().source()->numObjects());
  for (std::size_t o = 0; o < comps.size(); ++o) {
    comps[o] = d.composeIdx(alpha.componentAt(static_cast<int>(o)),
                            beta.componentAt(static_cast<int>(o)));
  }
  return NatTrans::validateIdx(beta.name() + "∘" + alpha.name(), alpha.source(),
                               beta.target(), std::move(comps));
}

NatTrans identityNatTrans(const Functor& f) {
  std::vector<int> comps(f.source()->numObjects());
  for (std::size_t o = 0; o < comps.size(); ++o)
    comps[o] = f.target()->identityOf(f.objAt(static_cast<int>(o)));
  return NatTrans::validateIdx("1_" + f.name(), f, f, std::move(comps));
}

SubCategory fullSubcategory(const CatPtr& c, const std::vector<std::string>& objects,
                            const std::string& name) {
  std::set<int> objs;
  for (const auto& o : objects) objs.insert(c->requireObject(o));
  RawCategory raw;
  raw.name = name;
  for (int o : objs) raw.objects.push_back(c->objects()[o]);
  std::vector<int> keep;
  for (std::size_t m = 0; m < c->numMors(); ++m) {
    const int mi = static_cast<int>(m);
    if (!objs.count(c->domOf(mi)) || !objs.count(c->codOf(mi))) continue;
    keep.push_back(mi);
    if (!c->isIdentity(mi)) raw.morphisms.push_back(c->mor(mi));
  }
  for (int f : keep)
    for (int g : keep) {
      if (c->isIdentity(f) || c->isIdentity(g)) continue;
      const int r = c->composeIdx(f, g);
      if (r >= 0)
        raw.composition.push_back({c->mor(f).name, c->mor(g).name, c->mor(r).name});
    }
  CatPtr sub = FinCat::mustValidate(raw);
  std::map<std::string, std::string> om, mm;
  for (const auto& o : sub->objects()) om[o] = o;
  for (const auto& m : sub->morphisms()) mm[m.name] = m.name;
  return {sub, Functor::validate("incl:" + name, sub, c, om, mm)};
}

std::string pairName(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

ProductResult productCategory(const CatPtr& b, const CatPtr& x) {
  RawCategory raw;
  raw.name = pairName(b->name(), x->name());
  for (const auto& ob : b->objects())
    for (const auto& ox : x->objects()) raw.objects.push_back(pairName(ob, ox));
  const int nb = static_cast<int>(b->numMors()), nx = static_cast<int>(x->numMors());
  auto isIdPair = [&](int f, int g) { return b->isIdentity(f) && x->isIdentity(g); };
  auto mname = [&](int f, int g) {
    if (isIdPair(f, g))
      return "id:" + pairName(b->objects()[b->domOf(f)], x->objects()[x->domOf(g)]);
    return pairName(b->mor(f).name, x->mor(g).name);
  };
  for (int f = 0; f < nb; ++f)
    for (int g = 0; g < nx; ++g) {
      if (isIdPair(f, g)) continue;
      raw.morphisms.push_back({pairName(b->mor(f).name, x->mor(g).name),
                               pairName(b->objects()[b->domOf(f)], x->objects()[x->domOf(g)]),
                               pairName(b->objects()[b->codOf(f)], x->objects()[x->codOf(g)])});
    }
  for (int f1 = 0; f1 < nb; ++f1)
    for (int g1 = 0; g1 < nx; ++g1) {
      if (isIdPair(f1, g1)) continue;
      for (int f2 = 0; f2 < nb; ++f2)
        for (int g2 = 0; g2 < nx; ++g2) {
          if (isIdPair(f2, g2)) continue;
          const int fc = b->composeIdx(f1, f2);
          const int gc = x->composeIdx(g1, g2);
          if (fc < 0 || gc < 0) continue;
          raw.composition.push_back({mname(f1, g1), mname(f2, g2), mname(fc, gc)});
        }
    }
  CatPtr prod = FinCat::mustValidate(raw);
  std::map<std::string, std::string> o1, m1, o2, m2;
  for (const auto& ob : b->objects())
    for (const auto& ox : x->objects()) {
      o1[pairName(ob, ox)] = ob;
      o2[pairName(ob, ox)] = ox;
    }
  for (int f = 0; f < nb; ++f)
    for (int g = 0; g < nx; ++g) {
      if (isIdPair(f, g)) continue;
      m1[mname(f, g)] = b->mor(f).name;
      m2[mname(f, g)] = x->mor(g).name;
    }
  Functor p1 = Functor::validate("pi1:" + raw.name, prod, b, o1, m1);
  Functor p2 = Functor::validate("pi2:" + raw.name, prod, x, o2, m2);
  return {prod, std::move(p1), std::move(p2)};
}

Functor diagonalFunctor(const CatPtr& c, const ProductResult& prod) {
  std::map<std::string, std::string> om, mm;
  for (const auto& o : c->objects()) om[o] = pairName(o, o);
  for (std::size_t m = 0; m < c->numMors(); ++m) {
    const int mi = static_cast<int>(m);
    if (c->isIdentity(mi)) continue;
    mm[c->mor(mi).name] = pairName(c->mor(mi).name, c->mor(mi).name);
  }
  return Functor::validate("diag:" + c->name(), c, prod.cat, om, mm);
}

}  // namespace catfib
