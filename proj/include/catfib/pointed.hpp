#pragma once

#include "catfib/constructions.hpp"
#include "catfib/fincat.hpp"

namespace catfib {

/// A pointed category (A, C): a non-empty category with a chosen object.
struct PointedCat {
  std::string point;
  CatPtr carrier;
};

/// Throws UnknownObject / EmptyCategory.
PointedCat makePointedCat(const std::string& point, const CatPtr& carrier);

/// A morphism of pointed categories (F, α): (A, C) → (B, D), where
/// α: FA → B in D.
struct PtdCatMor {
  PointedCat dom;
  PointedCat cod;
  Functor functor;
  std::string comparison;
};

/// Throws ShapeMismatch when F or α does not fit.
PtdCatMor makePtdCatMor(const PointedCat& dom, const PointedCat& cod,
                        const Functor& functor, const std::string& comparison);

PtdCatMor identityPtd(const PointedCat& p);

/// second ∘ first: (GF, β∘Gα). Throws ShapeMismatch on a codomain mismatch.
PtdCatMor composePtd(const PtdCatMor& first, const PtdCatMor& second);

/// Same underlying functor and comparison morphism (endpoints included).
bool ptdMorEqual(const PtdCatMor& a, const PtdCatMor& b);

/// Is the point a terminal object of the carrier?
bool isTerminallyPointedCat(const PointedCat& p);

/// G on objects: (A, C) ↦ (1_A, C/A), always terminally pointed.
struct GResult {
  PointedCat cat;
  SliceCat slice;
};
GResult gPointed(const PointedCat& p);

/// G on morphisms: (F, α) ↦ (Σ_α ∘ F/A, α).
PtdCatMor gOnMor(const PtdCatMor& m);

/// Does G carry second∘first to G(second)∘G(first)?
bool gPreservesComposition(const PtdCatMor& first, const PtdCatMor& second);

/// (Σ_A, 1_A): (1_A, C/A) → (A, C).
PtdCatMor universalArrowPtd(const PointedCat& p);

/// For a test morphism (F, α): (1, D) → (A, C) with terminally pointed
/// domain, constructs the factorization (Σ_α ∘ F/1, α) through the universal
/// arrow, checks it, and certifies uniqueness by exhaustive enumeration of
/// candidate factorizations. Throws FactorizationFailure or
/// NonUniqueFactorization with a witness.
PtdCatMor verifyUniversalArrow(const PointedCat& p, const PtdCatMor& test,
                               long long budget = 5'000'000);

}  // namespace catfib
