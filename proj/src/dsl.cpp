#include "catfib/dsl.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace catfib::dsl {

namespace {

std::string readFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CatError("SyntaxError", "cannot read " + path.string(),
                   {{"path", path.string()}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Ensure the value is an object with exactly the expected keys.
void checkFields(const json& obj, const std::string& where,
                 const std::vector<std::string>& required,
                 const std::vector<std::string>& optional = {}) {
  if (!obj.is_object())
    throw CatError("SyntaxError", where + " must be an object", {{"path", where}});
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      throw CatError("UnknownField", "unexpected field \"" + key + "\" in " + where,
                     {{"path", where + "/" + key}});
  }
  for (const auto& key : required)
    if (!obj.contains(key))
      throw CatError("SyntaxError", "missing field \"" + key + "\" in " + where,
                     {{"path", where + "/" + key}});
}

std::string getString(const json& obj, const std::string& where, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_string())
    throw CatError("SyntaxError", where + "/" + key + " must be a string",
                   {{"path", where + "/" + key}});
  return v.get<std::string>();
}

std::map<std::string, std::string> getStringMap(const json& obj, const std::string& where,
                                                const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_object())
    throw CatError("SyntaxError", where + "/" + key + " must be an object",
                   {{"path", where + "/" + key}});
  std::map<std::string, std::string> out;
  for (const auto& [k, val] : v.items()) {
    if (!val.is_string())
      throw CatError("SyntaxError", where + "/" + key + "/" + k + " must be a string",
                     {{"path", where + "/" + key + "/" + k}});
    out[k] = val.get<std::string>();
  }
  return out;
}

fs::path resolveRef(const fs::path& docPath, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute()) return p;
  return docPath.parent_path() / p;
}

}  // namespace

json parseJsonFile(const fs::path& path) {
  const std::string text = readFile(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw CatError("SyntaxError", "malformed JSON in " + path.string(),
                   {{"path", path.string()},
                    {"line", line},
                    {"column", column},
                    {"detail", e.what()}});
  }
}

std::string printCanonical(const json& doc) { return doc.dump(2) + "\n"; }

RawCategory categoryFromJson(const json& doc) {
  checkFields(doc, "category", {"name", "objects", "morphisms", "composition"});
  RawCategory raw;
  raw.name = getString(doc, "category", "name");
  if (!doc.at("objects").is_array())
    throw CatError("SyntaxError", "objects must be an array", {{"path", "/objects"}});
  for (std::size_t i = 0; i < doc.at("objects").size(); ++i) {
    const auto& o = doc.at("objects")[i];
    if (!o.is_string())
      throw CatError("SyntaxError", "objects entries must be strings",
                     {{"path", "/objects/" + std::to_string(i)}});
    raw.objects.push_back(o.get<std::string>());
  }
  if (!doc.at("morphisms").is_array())
    throw CatError("SyntaxError", "morphisms must be an array", {{"path", "/morphisms"}});
  for (std::size_t i = 0; i < doc.at("morphisms").size(); ++i) {
    const std::string where = "/morphisms/" + std::to_string(i);
    const auto& m = doc.at("morphisms")[i];
    checkFields(m, where, {"name", "dom", "cod"});
    MorData md{getString(m, where, "name"), getString(m, where, "dom"),
               getString(m, where, "cod")};
    for (const char* end : {"dom", "cod"}) {
      const std::string& obj = end == std::string("dom") ? md.dom : md.cod;
      if (std::find(raw.objects.begin(), raw.objects.end(), obj) == raw.objects.end())
        throw CatError("UnresolvedReference",
                       "morphism " + md.name + " references unknown object " + obj,
                       {{"path", where + "/" + end}});
    }
    raw.morphisms.push_back(std::move(md));
  }
  if (!doc.at("composition").is_array())
    throw CatError("SyntaxError", "composition must be an array",
                   {{"path", "/composition"}});
  auto known = [&](const std::string& n) {
    return std::any_of(raw.morphisms.begin(), raw.morphisms.end(),
                       [&](const MorData& m) { return m.name == n; });
  };
  for (std::size_t i = 0; i < doc.at("composition").size(); ++i) {
    const std::string where = "/composition/" + std::to_string(i);
    const auto& e = doc.at("composition")[i];
    checkFields(e, where, {"first", "second", "result"});
    std::array<std::string, 3> entry{getString(e, where, "first"),
                                     getString(e, where, "second"),
                                     getString(e, where, "result")};
    for (std::size_t k = 0; k < 3; ++k)
      if (!known(entry[k]))
        throw CatError("UnresolvedReference",
                       "composition references unknown morphism " + entry[k],
                       {{"path", where + "/" +
                                     std::vector<std::string>{"first", "second",
                                                              "result"}[k]}});
    raw.composition.push_back(std::move(entry));
  }
  return raw;
}

json categoryToJson(const RawCategory& input) {
  RawCategory raw = input;
  std::sort(raw.objects.begin(), raw.objects.end());
  std::sort(raw.morphisms.begin(), raw.morphisms.end(),
            [](const MorData& a, const MorData& b) { return a.name < b.name; });
  std::sort(raw.composition.begin(), raw.composition.end());
  json morphisms = json::array();
  for (const auto& m : raw.morphisms)
    morphisms.push_back({{"name", m.name}, {"dom", m.dom}, {"cod", m.cod}});
  json composition = json::array();
  for (const auto& e : raw.composition)
    composition.push_back({{"first", e[0]}, {"second", e[1]}, {"result", e[2]}});
  return {{"name", raw.name},
          {"objects", raw.objects},
          {"morphisms", morphisms},
          {"composition", composition}};
}

CatPtr loadCategory(const fs::path& path) {
  return FinCat::mustValidate(categoryFromJson(parseJsonFile(path)));
}

void writeCategory(const fs::path& path, const CatPtr& cat) {
  writeText(path, printCanonical(categoryToJson(cat->toRaw())));
}

Functor loadFunctor(const fs::path& path) {
  const json doc = parseJsonFile(path);
  checkFields(doc, "functor", {"name", "source", "target", "object_map", "morphism_map"});
  auto source = loadCategory(resolveRef(path, getString(doc, "functor", "source")));
  auto target = loadCategory(resolveRef(path, getString(doc, "functor", "target")));
  return Functor::validate(getString(doc, "functor", "name"), source, target,
                           getStringMap(doc, "functor", "object_map"),
                           getStringMap(doc, "functor", "morphism_map"));
}

void writeFunctor(const fs::path& path, const Functor& f,
                  const std::string& sourceRef, const std::string& targetRef) {
  json om = json::object(), mm = json::object();
  const CatPtr& s = f.source();
  for (const auto& o : s->objects()) om[o] = f.applyObj(o);
  for (const auto& m : s->morphisms())
    if (!s->isIdentity(s->morIndex(m.name))) mm[m.name] = f.applyMor(m.name);
  writeText(path, printCanonical({{"name", f.name()},
                                  {"source", sourceRef},
                                  {"target", targetRef},
                                  {"object_map", om},
                                  {"morphism_map", mm}}));
}

NatTrans loadNatTrans(const fs::path& path) {
  const json doc = parseJsonFile(path);
  checkFields(doc, "nattrans", {"source", "target", "components"}, {"name"});
  auto source = loadFunctor(resolveRef(path, getString(doc, "nattrans", "source")));
  auto target = loadFunctor(resolveRef(path, getString(doc, "nattrans", "target")));
  const std::string name = doc.contains("name") ? getString(doc, "nattrans", "name")
                                                : "nattrans";
  return NatTrans::validate(name, source, target,
                            getStringMap(doc, "nattrans", "components"));
}

Functor loadFibrationBundle(const fs::path& path) {
  const json doc = parseJsonFile(path);
  checkFields(doc, "bundle", {"total", "base", "functor"});
  auto total = loadCategory(resolveRef(path, getString(doc, "bundle", "total")));
  auto base = loadCategory(resolveRef(path, getString(doc, "bundle", "base")));
  auto functor = loadFunctor(resolveRef(path, getString(doc, "bundle", "functor")));
  if (!(*functor.source() == *total))
    throw CatError("UnresolvedReference",
                   "the bundle functor does not start at the total category",
                   {{"path", "/functor"}});
  if (!(*functor.target() == *base))
    throw CatError("UnresolvedReference",
                   "the bundle functor does not land in the base category",
                   {{"path", "/functor"}});
  return functor;
}

PointedBundle loadPointedBundle(const fs::path& path) {
  const json doc = parseJsonFile(path);
  checkFields(doc, "pointed", {"fibration", "point"});
  auto proj = loadFibrationBundle(resolveRef(path, getString(doc, "pointed", "fibration")));
  auto point = loadFunctor(resolveRef(path, getString(doc, "pointed", "point")));
  if (!(*point.source() == *proj.target()) || !(*point.target() == *proj.source()))
    throw CatError("UnresolvedReference",
                   "the point does not run from the base to the total category",
                   {{"path", "/point"}});
  return {std::move(proj), std::move(point)};
}

void writeText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw CatError("SyntaxError", "cannot write " + path.string(),
                   {{"path", path.string()}});
  out << text;
}

}  // namespace catfib::dsl
