#pragma once

#include "catfib/constructions.hpp"
#include "catfib/fincat.hpp"
#include "catfib/limits.hpp"

namespace catfib {

struct CartesianCheck {
  bool ok = false;
  json witness = json::object();  // failing (v, g) and candidate count
};

/// Is f P-cartesian? Quantifies over every (v: K→PX, g: Z→Y) with
/// Pg = Pf∘v and demands a unique h over v with f∘h = g.
CartesianCheck isCartesian(const Functor& p, const std::string& f);

/// Cartesianness of every morphism of the total category, by index.
std::vector<char> cartesianMask(const Functor& p);

/// A functor attested as a fibration with a deterministic choice of
/// cartesian liftings: (object Y of the total, base morphism u with
/// cod u = PY) ↦ the lexicographically smallest cartesian lift.
struct CleavedFibration {
  Functor proj;
  std::map<std::pair<int, int>, int> cleavage;

  const CatPtr& total() const { return proj.source(); }
  const CatPtr& base() const { return proj.target(); }
  int cleavageAt(int y, int u) const { return cleavage.at({y, u}); }
  std::string cleavageName(const std::string& y, const std::string& u) const;
};

struct FibrationResult {
  std::optional<CleavedFibration> fibration;
  json counterexample = json::object();  // (Y, u) with no cartesian lift
};

FibrationResult isFibration(const Functor& p);
/// Throws NotAFibration with the counterexample.
CleavedFibration mustFibration(const Functor& p);

bool isVertical(const Functor& p, const std::string& f);

struct FiberResult {
  CatPtr cat;
  Functor inclusion;  // fiber → total
};

/// Subcategory of the total category over I and id:I.
FiberResult fiberCategory(const Functor& p, const std::string& i);

/// V(P) with its codomain projection to the total category.
struct VerticalCatResult {
  CatPtr cat;          // full subcategory of arrow(total) on vertical objects
  Functor codP;        // V(P) → total
  Functor domP;        // V(P) → total
  Functor inclusion;   // V(P) → arrow(total)
  ArrowCat arrowCat;   // arrow category of the total
};

VerticalCatResult verticalCategory(const Functor& p);

struct FiberedPullbacksResult {
  bool ok = false;
  json witness = json::object();
};

/// Every fiber has pullbacks and the chosen fiber pullback squares are
/// carried to pullback squares by the cleavage-induced reindexing functors.
FiberedPullbacksResult hasFiberedPullbacks(const CleavedFibration& p);

/// u* : fiber over cod(u) → fiber over dom(u).
Functor reindexingFunctor(const CleavedFibration& p, const std::string& u);

struct ChangeOfBaseResult {
  CleavedFibration fibration;  // P_F : strict pullback total → C
  Functor toTotal;             // pullback total → total(P)
};

/// Strict change of base of p along f: C → base(p); objects "(<c>,<x>)".
ChangeOfBaseResult changeOfBase(const CleavedFibration& p, const Functor& f);

struct FiberedFunctorWitness {
  Functor p;  // projection of the source fibration
  Functor q;  // projection of the target fibration
  Functor functor;
};

std::variant<FiberedFunctorWitness, Violation>
isFiberedFunctor(const CleavedFibration& p, const CleavedFibration& q, const Functor& f);
FiberedFunctorWitness mustFiberedFunctor(const CleavedFibration& p,
                                         const CleavedFibration& q, const Functor& f);

struct FiberedNatTransCheck {
  bool ok = false;
  json witness = json::object();
};

/// Parallel fibered functors + all components Q-vertical (naturality is
/// already part of the NatTrans).
FiberedNatTransCheck isFiberedNatTrans(const FiberedFunctorWitness& f,
                                       const FiberedFunctorWitness& g,
                                       const NatTrans& gamma);

struct FiberedAdjunctionWitness {
  Adjunction adjunction;
  FiberedFunctorWitness left;
  FiberedFunctorWitness right;
};

std::variant<FiberedAdjunctionWitness, Violation>
isFiberedAdjunction(const CleavedFibration& p, const CleavedFibration& q,
                    const Functor& left, const Functor& right, const NatTrans& unit,
                    const NatTrans& counit);

// Canonical fibration builders used across fixtures.
CleavedFibration codFibration(const ArrowCat& ac);       // cod: C^→ → C
CleavedFibration domFibration(const ArrowCat& ac);       // dom: C^→ → C
CleavedFibration identityFibration(const CatPtr& c);     // 1_C
CleavedFibration bangFibration(const CatPtr& c);         // C → One
CleavedFibration pi1Fibration(const ProductResult& pr);  // π₁: B×X → B

}  // namespace catfib
