#include "catfib/equiv.hpp"

#include <algorithm>
#include <set>

namespace catfib {

bool objectsIsomorphic(const CatPtr& c, int a, int b) {
  for (int f : c->hom(a, b))
    for (int g : c->hom(b, a))
      if (c->composeIdx(f, g) == c->identityOf(a) &&
          c->composeIdx(g, f) == c->identityOf(b))
        return true;
  return false;
}

namespace {

struct FunctorSearch {
  const FinCat& c;
  const FinCat& d;
  long long budget;
  bool bijective;
  std::vector<int> objMap;          // by source object index, -1 unassigned
  std::vector<int> morMap;          // by source morphism index, -1 unassigned
  std::vector<int> nonIdMors;       // source non-identity morphism indices, in order
  std::vector<char> objUsed, morUsed;
  std::function<bool(std::vector<int>, std::vector<int>)> emit;
  bool stopped = false;

  void tick() {
    if (--budget < 0)
      throw CatError("BudgetExceeded", "functor search budget exhausted");
  }

  bool consistentAfter(int justAssigned) {
    const int nm = static_cast<int>(c.numMors());
    for (int a = 0; a < nm; ++a) {
      if (morMap[a] < 0) continue;
      for (int b = 0; b < nm; ++b) {
        if (morMap[b] < 0) continue;
        const int r = c.composeIdx(a, b);
        if (r < 0 || morMap[r] < 0) continue;
        if (a != justAssigned && b != justAssigned && r != justAssigned) continue;
        if (d.composeIdx(morMap[a], morMap[b]) != morMap[r]) return false;
      }
    }
    return true;
  }

  void assignMors(std::size_t k) {
    if (stopped) return;
    if (k == nonIdMors.size()) {
      if (!emit(objMap, morMap)) stopped = true;
      return;
    }
    const int m = nonIdMors[k];
    const int td = objMap[c.domOf(m)], tc = objMap[c.codOf(m)];
    for (int im : d.hom(td, tc)) {
      tick();
      if (bijective && morUsed[im]) continue;
      morMap[m] = im;
      if (bijective) morUsed[im] = 1;
      if (consistentAfter(m)) assignMors(k + 1);
      if (bijective) morUsed[im] = 0;
      morMap[m] = -1;
      if (stopped) return;
    }
  }

  void assignObjs(std::size_t k) {
    if (stopped) return;
    const int no = static_cast<int>(c.numObjects());
    if (k == static_cast<std::size_t>(no)) {
      // Identities are forced once objects are mapped.
      std::vector<int> assigned;
      bool feasible = true;
      for (int o = 0; o < no; ++o) {
        const int im = d.identityOf(objMap[o]);
        if (bijective && morUsed[im]) {
          feasible = false;
          break;
        }
        morMap[c.identityOf(o)] = im;
        if (bijective) morUsed[im] = 1;
        assigned.push_back(o);
      }
      // Bijective mode: hom-set cardinalities must match before descending.
      if (feasible && bijective) {
        for (int a = 0; a < no && feasible; ++a)
          for (int b = 0; b < no && feasible; ++b)
            if (c.hom(a, b).size() != d.hom(objMap[a], objMap[b]).size()) feasible = false;
      }
      if (feasible) assignMors(0);
      for (int o : assigned) {
        if (bijective) morUsed[d.identityOf(objMap[o])] = 0;
        morMap[c.identityOf(o)] = -1;
      }
      return;
    }
    for (int io = 0; io < static_cast<int>(d.numObjects()); ++io) {
      tick();
      if (bijective && objUsed[io]) continue;
      objMap[k] = io;
      if (bijective) objUsed[io] = 1;
      assignObjs(k + 1);
      if (bijective) objUsed[io] = 0;
      objMap[k] = -1;
      if (stopped) return;
    }
  }

  void run() {
    objMap.assign(c.numObjects(), -1);
    morMap.assign(c.numMors(), -1);
    objUsed.assign(d.numObjects(), 0);
    morUsed.assign(d.numMors(), 0);
    for (std::size_t m = 0; m < c.numMors(); ++m)
      if (!c.isIdentity(static_cast<int>(m))) nonIdMors.push_back(static_cast<int>(m));
    if (c.numObjects() == 0) {
      emit(objMap, morMap);
      return;
    }
    assignObjs(0);
  }
};

}  // namespace

void enumerateFunctors(const CatPtr& c, const CatPtr& d,
                       const std::function<bool(const Functor&)>& visit,
                       long long budget) {
  FunctorSearch s{*c, *d, budget, /*bijective=*/false};
  s.emit = [&](std::vector<int> om, std::vector<int> mm) {
    return visit(Functor::validateIdx("enum", c, d, std::move(om), std::move(mm)));
  };
  s.run();
}

std::optional<IsoWitness> categoryIsomorphism(const CatPtr& c, const CatPtr& d,
                                              long long budget) {
  if (c->numObjects() != d->numObjects() || c->numMors() != d->numMors())
    return std::nullopt;
  std::optional<IsoWitness> found;
  FunctorSearch s{*c, *d, budget, /*bijective=*/true};
  s.emit = [&](std::vector<int> om, std::vector<int> mm) {
    Functor fwd = Functor::validateIdx("iso:" + c->name() + "->" + d->name(), c, d,
                                       om, mm);
    std::vector<int> iom(d->numObjects()), imm(d->numMors());
    for (std::size_t i = 0; i < om.size(); ++i) iom[om[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < mm.size(); ++i) imm[mm[i]] = static_cast<int>(i);
    Functor bwd = Functor::validateIdx("iso:" + d->name() + "->" + c->name(), d, c,
                                       std::move(iom), std::move(imm));
    found = IsoWitness{std::move(fwd), std::move(bwd)};
    return false;  // stop at the first (deterministically smallest) witness
  };
  s.run();
  return found;
}

EquivalenceResult checkEquivalence(const Functor& f) {
  const FinCat& c = *f.source();
  const FinCat& d = *f.target();
  // Full + faithful: each hom-set maps bijectively onto hom(FA, FB).
  const int no = static_cast<int>(c.numObjects());
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      const auto& src = c.hom(a, b);
      const auto& tgt = d.hom(f.objAt(a), f.objAt(b));
      std::set<int> images;
      for (int m : src) {
        if (!images.insert(f.morAt(m)).second)
          return {false, "NotFaithful",
                  {{"dom", c.objects()[a]}, {"cod", c.objects()[b]},
                   {"image", d.mor(f.morAt(m)).name}}};
      }
      if (images.size() != tgt.size())
        return {false, "NotFull",
                {{"dom", c.objects()[a]},
                 {"cod", c.objects()[b]},
                 {"hom_size", src.size()},
                 {"image_hom_size", tgt.size()}}};
    }
  // Essentially surjective.
  for (int y = 0; y < static_cast<int>(d.numObjects()); ++y) {
    bool hit = false;
    for (int a = 0; a < no && !hit; ++a)
      if (objectsIsomorphic(f.target(), f.objAt(a), y)) hit = true;
    if (!hit)
      return {false, "NotEssentiallySurjective", {{"object", d.objects()[y]}}};
  }
  return {true, "", json::object()};
}

}  // namespace catfib
