#pragma once

#include <filesystem>

#include "catfib/fibration.hpp"

namespace catfib::dsl {

namespace fs = std::filesystem;

/// Parses a UTF-8 JSON file; malformed input throws SyntaxError with the
/// 1-based line and column of the failure in the witness.
json parseJsonFile(const fs::path& path);

/// Canonical rendering: two-space indent, keys sorted, trailing newline.
std::string printCanonical(const json& doc);

/// Category documents: {name, objects, morphisms: [{name, dom, cod}],
/// composition: [{first, second, result}]} with result = second∘first.
/// Identities never appear in files. Strict fields; dangling names throw
/// UnresolvedReference with the offending JSON path.
RawCategory categoryFromJson(const json& doc);
json categoryToJson(const RawCategory& raw);

/// Parse + law validation; throws InvalidCategory with all violations.
CatPtr loadCategory(const fs::path& path);
void writeCategory(const fs::path& path, const CatPtr& cat);

/// Functor documents: {name, source, target, object_map, morphism_map};
/// source/target are category file paths resolved against the document's
/// directory. morphism_map covers the non-identity morphisms.
Functor loadFunctor(const fs::path& path);
void writeFunctor(const fs::path& path, const Functor& f,
                  const std::string& sourceRef, const std::string& targetRef);

/// Natural-transformation documents:
/// {name?, source, target, components} with functor file paths.
NatTrans loadNatTrans(const fs::path& path);

/// Fibration bundles: {total, base, functor} — the functor document must
/// run from the total to the base category.
Functor loadFibrationBundle(const fs::path& path);

/// Pointed bundles: {fibration, point} — a bundle path and a functor path;
/// the point must run from the base to the total category.
struct PointedBundle {
  Functor proj;
  Functor point;
};
PointedBundle loadPointedBundle(const fs::path& path);

void writeText(const fs::path& path, const std::string& text);

}  // namespace catfib::dsl
