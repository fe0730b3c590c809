#pragma once

#include "catfib/fincat.hpp"

namespace catfib {

/// A cone over a cospan (f: X→A, g: Y→A): apex with legs to X and Y.
struct Cone {
  std::string apex;
  std::string leg1;  // apex → X
  std::string leg2;  // apex → Y
  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

struct PullbackResult {
  Cone cone;  // the canonical terminal cone
  /// Every cone over the cospan with its unique mediating morphism into cone.
  std::vector<std::pair<Cone, std::string>> mediators;
};

/// Smallest terminal object by name, if any.
std::optional<std::string> terminalObject(const CatPtr& c);

/// Terminal cone over the cospan (f, g), canonical choice; empty when none.
/// Throws ShapeMismatch if cod(f) != cod(g).
std::optional<PullbackResult> pullback(const CatPtr& c, const std::string& f,
                                       const std::string& g);

struct CospanWitness {
  std::string f;
  std::string g;
};

struct HasPullbacksResult {
  bool ok = false;
  std::optional<CospanWitness> counterexample;
};

HasPullbacksResult hasPullbacks(const CatPtr& c);

/// The unique mediating morphism from `cone` into the terminal cone of `pb`.
/// Throws if the cone is not a cone over the same cospan.
std::string mediatingMorphism(const CatPtr& c, const PullbackResult& pb, const Cone& cone);

/// Is `cone` a terminal cone over the cospan (f, g)?
bool isTerminalCone(const CatPtr& c, const std::string& f, const std::string& g,
                    const Cone& cone);

}  // namespace catfib
