#pragma once

#include "catfib/fibration.hpp"
#include "catfib/pointed.hpp"

namespace catfib {

/// A fibration P: X → B with a section p: B → X of its projection.
/// `pointFibered` records whether every p(u) is P-cartesian, i.e. whether
/// the point is a fibered functor in the strict, cartesian-preserving
/// sense. Sections that are not strictly fibered (such as a diagonal point
/// of a projection fibration) still admit the slice construction.
struct PointedFibration {
  CleavedFibration fib;
  Functor point;
  bool pointFibered = false;
};

/// Checks P∘p = 1_B strictly (NotASection) and records cartesianness of
/// every p(u). With requireFiberedPoint, a non-cartesian image throws
/// PointNotFibered with the witnessing base morphism.
PointedFibration validatePointedFibration(const CleavedFibration& fib,
                                          const Functor& point,
                                          bool requireFiberedPoint = false);

/// Primary characterization: every p(u) cartesian and every p(I) terminal
/// in the fiber over I. Cross-checked against building the unit of a
/// fibered adjunction P ⊣ p and verifying its triangle identities; a
/// disagreement throws CharacterizationMismatch.
bool isTerminallyPointed(const PointedFibration& pf);

/// (F, α): (p, P) → (q, Q) with F fibered and α: F∘p ⇒ q Q-vertical.
struct PtdFibMor {
  PointedFibration dom;
  PointedFibration cod;
  Functor functor;
  NatTrans comparison;
};

PtdFibMor makePtdFibMor(const PointedFibration& dom, const PointedFibration& cod,
                        const Functor& functor, const NatTrans& comparison);
PtdFibMor identityPtdFib(const PointedFibration& pf);
/// second ∘ first: (GF, β∘Gα).
PtdFibMor composePtdFib(const PtdFibMor& first, const PtdFibMor& second);
bool ptdFibMorEqual(const PtdFibMor& a, const PtdFibMor& b);

/// γ: (F, α) ⇒ (G, β): fibered γ: F ⇒ G with β_I ∘ γ_{pI} = α_I for all I.
bool checkPtdFib2Cell(const NatTrans& gamma, const PtdFibMor& m1, const PtdFibMor& m2);

/// Is the naturality square of the comparison at u a pullback in the
/// codomain's total category?
bool checkPullbackSquareProperty(const PtdFibMor& m, const std::string& u);

/// Change of base of the fibration together with the induced point
/// X ↦ (X, pFX).
PointedFibration changeOfBasePointed(const PointedFibration& pf, const Functor& f);

/// The slice fibration P/p: Y → B, built as the change of base of
/// cod_P: V(P) → X along the point, together with its terminal point
/// I ↦ (I, 1_pI) and the fibration of morphisms P^→ = P ∘ cod_P.
struct SliceFibration {
  PointedFibration source;
  CleavedFibration fib;          // P/p : Y → B
  Functor overlineP;             // Y → V(P)
  Functor topFunctor;            // Y → X, (u, f) ↦ f
  Functor terminalPoint;         // B → Y, I ↦ (I, 1_pI)
  VerticalCatResult vertical;    // V(P) over X
  CleavedFibration codP;         // cod_P : V(P) → X
  CleavedFibration morFib;       // P^→ : V(P) → B
  FiberedFunctorWitness codPFibered;  // cod_P : P^→ →_B P
};

/// Throws NoFiberedPullbacks with a fiber/cospan witness.
SliceFibration sliceFibration(const PointedFibration& pf);

/// Is the defining square of the morphism a pullback in the original total
/// category? (Equivalent to P/p-cartesianness.)
bool isPullbackSquare(const SliceFibration& sf, const std::string& m);

/// (P/p)_I ≃ P_I / pI, certified.
EquivCert sliceFiberEquiv(const SliceFibration& sf, const std::string& i);

/// Σ_p: P/p →_B P, (I, x: X → pI) ↦ X; certified cartesian-preserving.
FiberedFunctorWitness forgetfulSigmaP(const SliceFibration& sf);

/// For α: p ⇒ q a vertical transformation between points of the same
/// fibration: α*: P/q → P/p by fiberwise pullback along α_I, and
/// Σ_α: P/p → P/q by postcomposition with α_I.
Functor alphaStarFunctor(const SliceFibration& sp, const SliceFibration& sq,
                         const NatTrans& alpha);
Functor sigmaAlphaFunctor(const SliceFibration& sp, const SliceFibration& sq,
                          const NatTrans& alpha);
/// The same functors certified fibered (throws CartesianNotPreserved when
/// the points involved are not strictly fibered).
FiberedFunctorWitness alphaStar(const SliceFibration& sp, const SliceFibration& sq,
                                const NatTrans& alpha);
FiberedFunctorWitness sigmaAlpha(const SliceFibration& sp, const SliceFibration& sq,
                                 const NatTrans& alpha);

/// Σ_α ⊣ α* with unit and counit from the pullback universal properties.
FiberedAdjunctionWitness fiberedAdjunctionSigmaAlpha(const SliceFibration& sp,
                                                     const SliceFibration& sq,
                                                     const NatTrans& alpha);

/// (Σ_q, 1_q): (1_q•, Q/q) → (q, Q).
PtdFibMor fiberwiseUniversalArrow(const SliceFibration& sf);

/// For a test (F, α): (p, P) → (q, Q) with terminally pointed domain:
/// builds the factorization through (Σ_q, 1_q), checks it, and certifies
/// uniqueness by bounded enumeration. Throws FactorizationFailure or
/// NonUniqueFactorization.
PtdFibMor verifyFiberwiseUniversalArrow(const SliceFibration& sf, const PtdFibMor& test,
                                        long long budget = 5'000'000);

/// ((H, K), α): (p, P) → (q, Q) across different bases: Q∘H = K∘P, H
/// cartesian-preserving, α: H∘p ⇒ q∘K with Q-vertical components.
struct CrossBaseMor {
  PointedFibration dom;
  PointedFibration cod;
  Functor h;  // total → total
  Functor k;  // base → base
  NatTrans alpha;
};

CrossBaseMor makeCrossBaseMor(const PointedFibration& dom, const PointedFibration& cod,
                              const Functor& h, const Functor& k, const NatTrans& alpha);
CrossBaseMor identityCrossBase(const PointedFibration& pf);
CrossBaseMor composeCrossBase(const CrossBaseMor& first, const CrossBaseMor& second);
bool crossBaseEqual(const CrossBaseMor& a, const CrossBaseMor& b);

}  // namespace catfib
