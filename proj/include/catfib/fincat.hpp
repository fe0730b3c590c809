#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <json.hpp>

namespace catfib {

using json = nlohmann::json;

/// Hard error thrown by operations whose preconditions are violated
/// (NotComposable, UnknownObject, ShapeMismatch, BudgetExceeded, ...).
class CatError : public std::runtime_error {
public:
  CatError(std::string kind, const std::string& msg, json witness = json::object())
      : std::runtime_error(kind + ": " + msg), kind(std::move(kind)),
        witness(std::move(witness)) {}
  const std::string kind;
  const json witness;
};

/// A single violated law, with the witnessing data.
struct Violation {
  std::string kind;
  std::string message;
  json witness = json::object();
};

struct MorData {
  std::string name;
  std::string dom;
  std::string cod;
};

/// A category presentation before validation. Identities are never listed;
/// they are synthesized with the reserved "id:" prefix. Composition entries
/// are {first, second, result} with result = second ∘ first (diagrammatic
/// order) and cover exactly the non-identity composable pairs.
struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorData> morphisms;
  std::vector<std::array<std::string, 3>> composition;
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

/// A validated finite category: total composition table, identity and
/// associativity laws hold. Immutable after construction.
class FinCat {
public:
  static std::variant<CatPtr, std::vector<Violation>> validate(const RawCategory& raw);
  /// validate() that throws CatError("InvalidCategory") on any violation.
  static CatPtr mustValidate(const RawCategory& raw);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& objects() const { return objects_; }
  /// All morphisms, identities included, sorted by name.
  const std::vector<MorData>& morphisms() const { return mors_; }

  int objectIndex(const std::string& name) const;  // -1 if absent
  int morIndex(const std::string& name) const;     // -1 if absent
  int requireObject(const std::string& name) const;  // throws UnknownObject
  int requireMor(const std::string& name) const;     // throws UnknownMorphism

  const MorData& mor(int m) const { return mors_[m]; }
  int domOf(int m) const { return morDom_[m]; }
  int codOf(int m) const { return morCod_[m]; }
  int identityOf(int obj) const { return identity_[obj]; }
  bool isIdentity(int m) const { return identityOf(domOf(m)) == m; }

  std::size_t numObjects() const { return objects_.size(); }
  std::size_t numMors() const { return mors_.size(); }

  /// g ∘ f by index; -1 when cod(f) != dom(g).
  int composeIdx(int f, int g) const {
    return morCod_[f] == morDom_[g] ? table_[f * mors_.size() + g] : -1;
  }
  /// g ∘ f by name; throws NotComposable.
  std::string composeName(const std::string& f, const std::string& g) const;

  /// Morphism indices with the given dom/cod, in name order.
  const std::vector<int>& hom(int domObj, int codObj) const;

  bool isIso(int m) const;

  /// The presentation (identities stripped), canonically sorted.
  RawCategory toRaw() const;

  /// Structural equality of presentations (names, morphisms, table).
  friend bool operator==(const FinCat& a, const FinCat& b);

private:
  FinCat() = default;
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<MorData> mors_;
  std::vector<int> morDom_, morCod_;
  std::vector<int> identity_;
  std::vector<int> table_;  // table_[f*n+g] = g∘f, -1 if not composable
  std::unordered_map<std::string, int> objIndex_, morIndex_;
  std::map<std::pair<int, int>, std::vector<int>> homs_;
  static const std::vector<int> emptyHom_;
};

/// validate_category over a raw presentation.
std::variant<CatPtr, std::vector<Violation>> validateCategory(const RawCategory& raw);

/// A validated functor. Identity-preservation is by construction; dom/cod
/// and composition preservation are checked exhaustively.
class Functor {
public:
  static Functor validate(std::string name, CatPtr source, CatPtr target,
                          const std::map<std::string, std::string>& objectMap,
                          const std::map<std::string, std::string>& morphismMap);
  /// Maps given by source index -> target index (identities included).
  static Functor validateIdx(std::string name, CatPtr source, CatPtr target,
                             std::vector<int> objMap, std::vector<int> morMap);

  const std::string& name() const { return name_; }
  const CatPtr& source() const { return source_; }
  const CatPtr& target() const { return target_; }
  int objAt(int o) const { return objMap_[o]; }
  int morAt(int m) const { return morMap_[m]; }
  std::string applyObj(const std::string& obj) const;
  std::string applyMor(const std::string& mor) const;
  const std::vector<int>& objMap() const { return objMap_; }
  const std::vector<int>& morMap() const { return morMap_; }

  /// Same source/target presentations and same maps; names ignored.
  friend bool operator==(const Functor& a, const Functor& b);

private:
  Functor() = default;
  std::string name_;
  CatPtr source_, target_;
  std::vector<int> objMap_, morMap_;
};

/// A natural transformation with all naturality squares verified.
class NatTrans {
public:
  /// components: source object name -> morphism name in the target category.
  /// Throws ShapeMismatch / MissingComponent / NaturalitySquareViolation.
  static NatTrans validate(std::string name, const Functor& source, const Functor& target,
                           const std::map<std::string, std::string>& components);
  static NatTrans validateIdx(std::string name, const Functor& source, const Functor& target,
                              std::vector<int> components);

  /// Non-throwing check; empty result carries the failing square.
  static std::variant<NatTrans, Violation>
  check(std::string name, const Functor& source, const Functor& target,
        const std::map<std::string, std::string>& components);

  const std::string& name() const { return name_; }
  const Functor& source() const { return src_; }
  const Functor& target() const { return tgt_; }
  /// Component at source object index, as a target morphism index.
  int componentAt(int obj) const { return components_[obj]; }
  const std::vector<int>& components() const { return components_; }

  friend bool operator==(const NatTrans& a, const NatTrans& b);

private:
  NatTrans(std::string name, Functor src, Functor tgt, std::vector<int> comps)
      : name_(std::move(name)), src_(std::move(src)), tgt_(std::move(tgt)),
        components_(std::move(comps)) {}
  std::string name_;
  Functor src_, tgt_;
  std::vector<int> components_;
};

// ---- functor / transformation algebra -------------------------------------

Functor identityFunctor(const CatPtr& c);
/// second ∘ first (diagrammatic order).
Functor composeFunctors(const Functor& first, const Functor& second);
/// Gα: whisker a functor on the left of a transformation.
NatTrans whiskerLeft(const Functor& g, const NatTrans& alpha);
/// γp: precompose the transformation's functors with p.
NatTrans whiskerRight(const NatTrans& gamma, const Functor& p);
/// β ∘ α vertically (α first).
NatTrans verticalCompose(const NatTrans& beta, const NatTrans& alpha);
NatTrans identityNatTrans(const Functor& f);

/// Full subcategory on the given objects, plus the inclusion functor.
struct SubCategory {
  CatPtr cat;
  Functor inclusion;
};
SubCategory fullSubcategory(const CatPtr& c, const std::vector<std::string>& objects,
                            const std::string& name);

/// Product category with its projections, names "(<a>,<b>)" / "(<f>,<g>)".
struct ProductResult {
  CatPtr cat;
  Functor proj1;
  Functor proj2;
};
ProductResult productCategory(const CatPtr& b, const CatPtr& x);
/// Δ_C : C -> C×C over the given product of C with itself.
Functor diagonalFunctor(const CatPtr& c, const ProductResult& prod);

std::string pairName(const std::string& a, const std::string& b);

}  // namespace catfib
