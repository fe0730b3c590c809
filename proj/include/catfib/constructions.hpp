#pragma once

#include "catfib/equiv.hpp"
#include "catfib/fincat.hpp"
#include "catfib/limits.hpp"

namespace catfib {

/// Slice C/A (or opslice A\C): carrier objects are named by the base
/// morphisms into (out of) A; a carrier morphism is named "<g>|<edge>"
/// where g is the underlying base morphism and <edge> disambiguates the
/// triangle (codomain object for slices, domain object for opslices).
struct SliceCat {
  CatPtr base;
  std::string over;
  CatPtr carrier;
  Functor proj;  // Σ_A : carrier → base (domain projection; codomain for opslices)
};

SliceCat buildSlice(const CatPtr& c, const std::string& a);
SliceCat buildOpslice(const CatPtr& c, const std::string& i);

/// Arrow category C^→: objects are the morphisms of C, morphisms are the
/// commuting squares, named "(<top>,<bottom>)|<x>|<y>".
struct ArrowCat {
  CatPtr base;
  CatPtr carrier;
  Functor domFunctor;
  Functor codFunctor;
};

ArrowCat buildArrowCategory(const CatPtr& c);

/// Σ_f : C/A → C/B for f: A→B, post-composition with f.
Functor sigmaF(const CatPtr& c, const std::string& f);

/// f* : C/B → C/A by canonical pullback along f.
/// Throws MissingPullback with the cospan witness.
Functor reindex(const CatPtr& c, const std::string& f);

struct Adjunction {
  Functor left;
  Functor right;
  NatTrans unit;    // 1 ⇒ right∘left
  NatTrans counit;  // left∘right ⇒ 1
};

/// Verifies shapes and both triangle identities; throws
/// TriangleIdentityViolation with the failing component.
Adjunction checkAdjunction(const Functor& left, const Functor& right,
                           const NatTrans& unit, const NatTrans& counit);

/// Σ_f ⊣ f*, unit and counit built from the canonical pullbacks.
Adjunction adjunctionSigmaReindex(const CatPtr& c, const std::string& f);

struct FunctorPair {
  Functor forward;
  Functor backward;
};

/// (C/B)/f ≅ C/A with composites equal to identity functors.
FunctorPair sliceOfSliceIso(const CatPtr& c, const std::string& f);

struct EquivCert {
  Functor functor;
  EquivalenceResult cert;
};

/// Σ_1 : C/1 → C, certified an equivalence. Throws NoTerminalObject.
EquivCert sliceTerminalEquiv(const CatPtr& c);

/// F/A : C/A → D/FA.
Functor sliceFunctor(const Functor& f, const std::string& a);

/// Name of the slice morphism with underlying g and disambiguating edge e,
/// for g not an identity.
std::string sliceMorName(const std::string& g, const std::string& e);

}  // namespace catfib
