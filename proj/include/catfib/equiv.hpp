#pragma once

#include <functional>

#include "catfib/fincat.hpp"

namespace catfib {

struct IsoWitness {
  Functor forward;
  Functor backward;
};

/// Deterministic search for an isomorphism of categories. The budget counts
/// search nodes; exhausting it throws BudgetExceeded.
std::optional<IsoWitness> categoryIsomorphism(const CatPtr& c, const CatPtr& d,
                                              long long budget = 5'000'000);

struct EquivalenceResult {
  bool ok = false;
  std::string failure;  // empty when ok
  json witness = json::object();
};

/// Full + faithful + essentially surjective.
EquivalenceResult checkEquivalence(const Functor& f);

/// Are two objects of c isomorphic?
bool objectsIsomorphic(const CatPtr& c, int a, int b);

/// Enumerate every functor c -> d in deterministic order, invoking the
/// callback for each; the callback returns false to stop early. The budget
/// counts search nodes across the whole enumeration.
void enumerateFunctors(const CatPtr& c, const CatPtr& d,
                       const std::function<bool(const Functor&)>& visit,
                       long long budget = 5'000'000);

}  // namespace catfib
