#pragma once

#include "catfib/fincat.hpp"

namespace catfib::fixtures {

/// Terminal category: one object "pt".
CatPtr one();
/// Walking arrow: a --f--> b.
CatPtr two();
/// x --f--> c <--g-- y (no pullback of the cospan).
CatPtr cospan();
/// x <--f-- s --g--> y.
CatPtr span();
/// Powerset of {1,2} under inclusion: objects e, 1, 2, 12.
CatPtr pset();
/// Two objects, no cross morphisms.
CatPtr discrete2();
/// One object, morphisms s,t with g∘f = g (noncommutative monoid).
CatPtr monoid3();

/// The named fixtures above, in a fixed order.
std::vector<CatPtr> corpus();

}  // namespace catfib::fixtures
