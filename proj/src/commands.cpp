#include "catfib/commands.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "catfib/dsl.hpp"
#include "catfib/equiv.hpp"
#include "catfib/pointed.hpp"
#include "catfib/slicefib.hpp"

namespace catfib::cmd {

namespace {

namespace fs = std::filesystem;

struct Ctx {
  std::string out;
  std::string fixtures;
  long long budget = 5'000'000;
  json data = json::object();
  json witnesses = json::array();

  fs::path resolve(const std::string& arg) const {
    if (fs::exists(arg) || fixtures.empty()) return arg;
    fs::path alt = fs::path(fixtures) / arg;
    return fs::exists(alt) ? alt : fs::path(arg);
  }

  void exportCategory(const std::string& file, const CatPtr& c) {
    if (out.empty()) return;
    dsl::writeCategory(fs::path(out) / file, c);
    data["files"].push_back(file);
  }
  void exportFunctor(const std::string& file, const Functor& f,
                     const std::string& sourceRef, const std::string& targetRef) {
    if (out.empty()) return;
    dsl::writeFunctor(fs::path(out) / file, f, sourceRef, targetRef);
    data["files"].push_back(file);
  }
  void exportDoc(const std::string& file, const json& doc) {
    if (out.empty()) return;
    dsl::writeText(fs::path(out) / file, dsl::printCanonical(doc));
    data["files"].push_back(file);
  }
};

/// Error kinds that mean "the input was well-formed but the property fails",
/// mapped to exit 1; everything else is invalid input (exit 2).
bool isPropertyFailure(const std::string& kind) {
  static const std::set<std::string> kinds = {
      "NotAFibration",         "NoFiberedPullbacks",
      "TriangleIdentityViolation", "FactorizationFailure",
      "NonUniqueFactorization", "PointNotFibered",
      "SliceNotTerminallyPointed", "CharacterizationMismatch",
      "CartesianNotPreserved", "ProjectionMismatch",
      "NonVerticalComponent",  "NotASection",
      "MissingPullback",       "NoTerminalObject",
      "NaturalitySquareViolation"};
  return kinds.count(kind) > 0;
}

PointedFibration loadPointed(Ctx& ctx, const std::string& arg) {
  auto pb = dsl::loadPointedBundle(ctx.resolve(arg));
  return validatePointedFibration(mustFibration(pb.proj), pb.point);
}

std::string renderText(const json& report) {
  std::ostringstream os;
  os << report.at("command").get<std::string>() << ": "
     << report.at("verdict").get<std::string>() << "\n";
  if (report.contains("data") && !report.at("data").empty())
    os << "data: " << report.at("data").dump() << "\n";
  for (const auto& w : report.at("witnesses"))
    os << "witness: " << w.dump() << "\n";
  return os.str();
}

using Handler = std::function<bool(Ctx&, const std::vector<std::string>&)>;

struct Command {
  std::size_t arity;
  std::string usage;
  Handler handler;  // returns the verdict; throws CatError otherwise
};

const std::map<std::string, Command>& commandTable() {
  static const std::map<std::string, Command> table = {
      {"validate",
       {1, "validate CAT", [](Ctx& ctx, const auto& a) {
          auto raw = dsl::categoryFromJson(dsl::parseJsonFile(ctx.resolve(a[0])));
          auto res = FinCat::validate(raw);
          if (auto* violations = std::get_if<std::vector<Violation>>(&res)) {
            for (const auto& v : *violations)
              ctx.witnesses.push_back(
                  {{"kind", v.kind}, {"message", v.message}, {"witness", v.witness}});
            return false;
          }
          const auto& c = std::get<CatPtr>(res);
          ctx.data = {{"objects", c->numObjects()}, {"morphisms", c->numMors()}};
          return true;
        }}},
      {"slice",
       {2, "slice CAT OBJ", [](Ctx& ctx, const auto& a) {
          auto s = buildSlice(dsl::loadCategory(ctx.resolve(a[0])), a[1]);
          ctx.data = {{"objects", s.carrier->numObjects()},
                      {"morphisms", s.carrier->numMors()}};
          ctx.exportCategory("slice.cat.json", s.carrier);
          ctx.exportFunctor("slice-proj.fun.json", s.proj, "slice.cat.json", a[0]);
          return true;
        }}},
      {"opslice",
       {2, "opslice CAT OBJ", [](Ctx& ctx, const auto& a) {
          auto s = buildOpslice(dsl::loadCategory(ctx.resolve(a[0])), a[1]);
          ctx.data = {{"objects", s.carrier->numObjects()},
                      {"morphisms", s.carrier->numMors()}};
          ctx.exportCategory("opslice.cat.json", s.carrier);
          return true;
        }}},
      {"arrow",
       {1, "arrow CAT", [](Ctx& ctx, const auto& a) {
          auto ac = buildArrowCategory(dsl::loadCategory(ctx.resolve(a[0])));
          ctx.data = {{"objects", ac.carrier->numObjects()},
                      {"morphisms", ac.carrier->numMors()}};
          ctx.exportCategory("arrow.cat.json", ac.carrier);
          ctx.exportFunctor("arrow-dom.fun.json", ac.domFunctor, "arrow.cat.json", a[0]);
          ctx.exportFunctor("arrow-cod.fun.json", ac.codFunctor, "arrow.cat.json", a[0]);
          return true;
        }}},
      {"product",
       {2, "product CAT1 CAT2", [](Ctx& ctx, const auto& a) {
          auto pr = productCategory(dsl::loadCategory(ctx.resolve(a[0])),
                                    dsl::loadCategory(ctx.resolve(a[1])));
          ctx.data = {{"objects", pr.cat->numObjects()},
                      {"morphisms", pr.cat->numMors()}};
          ctx.exportCategory("product.cat.json", pr.cat);
          ctx.exportFunctor("product-proj1.fun.json", pr.proj1, "product.cat.json",
                            a[0]);
          ctx.exportFunctor("product-proj2.fun.json", pr.proj2, "product.cat.json",
                            a[1]);
          return true;
        }}},
      {"pullback",
       {3, "pullback CAT F G", [](Ctx& ctx, const auto& a) {
          auto c = dsl::loadCategory(ctx.resolve(a[0]));
          auto pb = pullback(c, a[1], a[2]);
          if (!pb) {
            ctx.witnesses.push_back({{"cospan", {a[1], a[2]}}});
            return false;
          }
          ctx.data = {{"apex", pb->cone.apex},
                      {"leg1", pb->cone.leg1},
                      {"leg2", pb->cone.leg2}};
          return true;
        }}},
      {"terminal",
       {1, "terminal CAT", [](Ctx& ctx, const auto& a) {
          auto t = terminalObject(dsl::loadCategory(ctx.resolve(a[0])));
          if (!t) return false;
          ctx.data = {{"terminal", *t}};
          return true;
        }}},
      {"is-fibration",
       {1, "is-fibration BUNDLE", [](Ctx& ctx, const auto& a) {
          auto res = isFibration(dsl::loadFibrationBundle(ctx.resolve(a[0])));
          if (!res.fibration) {
            ctx.witnesses.push_back(res.counterexample);
            return false;
          }
          ctx.data = {{"cartesian_lifts", res.fibration->cleavage.size()}};
          return true;
        }}},
      {"fiber",
       {2, "fiber BUNDLE OBJ", [](Ctx& ctx, const auto& a) {
          auto f = fiberCategory(dsl::loadFibrationBundle(ctx.resolve(a[0])), a[1]);
          ctx.data = {{"objects", f.cat->numObjects()},
                      {"morphisms", f.cat->numMors()}};
          ctx.exportCategory("fiber.cat.json", f.cat);
          return true;
        }}},
      {"vertical-cat",
       {1, "vertical-cat BUNDLE", [](Ctx& ctx, const auto& a) {
          auto v = verticalCategory(dsl::loadFibrationBundle(ctx.resolve(a[0])));
          ctx.data = {{"objects", v.cat->numObjects()},
                      {"morphisms", v.cat->numMors()}};
          ctx.exportCategory("vertical.cat.json", v.cat);
          return true;
        }}},
      {"fibered-pullbacks",
       {1, "fibered-pullbacks BUNDLE", [](Ctx& ctx, const auto& a) {
          auto fib = mustFibration(dsl::loadFibrationBundle(ctx.resolve(a[0])));
          auto res = hasFiberedPullbacks(fib);
          if (!res.ok) {
            ctx.witnesses.push_back(res.witness);
            return false;
          }
          return true;
        }}},
      {"change-of-base",
       {2, "change-of-base BUNDLE FUNCTOR", [](Ctx& ctx, const auto& a) {
          auto fib = mustFibration(dsl::loadFibrationBundle(ctx.resolve(a[0])));
          auto f = dsl::loadFunctor(ctx.resolve(a[1]));
          auto cb = changeOfBase(fib, f);
          ctx.data = {{"objects", cb.fibration.total()->numObjects()},
                      {"morphisms", cb.fibration.total()->numMors()}};
          ctx.exportCategory("cob-total.cat.json", cb.fibration.total());
          ctx.exportCategory("cob-base.cat.json", cb.fibration.base());
          ctx.exportFunctor("cob-proj.fun.json", cb.fibration.proj,
                            "cob-total.cat.json", "cob-base.cat.json");
          ctx.exportDoc("cob.bundle.json", {{"total", "cob-total.cat.json"},
                                            {"base", "cob-base.cat.json"},
                                            {"functor", "cob-proj.fun.json"}});
          return true;
        }}},
      {"slice-fibration",
       {1, "slice-fibration PTD", [](Ctx& ctx, const auto& a) {
          auto pf = loadPointed(ctx, a[0]);
          auto sf = sliceFibration(pf);
          ctx.data = {{"objects", sf.fib.total()->numObjects()},
                      {"morphisms", sf.fib.total()->numMors()},
                      {"point_fibered", pf.pointFibered}};
          ctx.exportCategory("slicefib-total.cat.json", sf.fib.total());
          ctx.exportCategory("slicefib-base.cat.json", sf.fib.base());
          ctx.exportFunctor("slicefib-proj.fun.json", sf.fib.proj,
                            "slicefib-total.cat.json", "slicefib-base.cat.json");
          ctx.exportFunctor("slicefib-point.fun.json", sf.terminalPoint,
                            "slicefib-base.cat.json", "slicefib-total.cat.json");
          ctx.exportDoc("slicefib.bundle.json",
                        {{"total", "slicefib-total.cat.json"},
                         {"base", "slicefib-base.cat.json"},
                         {"functor", "slicefib-proj.fun.json"}});
          ctx.exportDoc("slicefib.ptd.json", {{"fibration", "slicefib.bundle.json"},
                                              {"point", "slicefib-point.fun.json"}});
          return true;
        }}},
      {"check-adjunction",
       {4, "check-adjunction LEFT RIGHT UNIT COUNIT", [](Ctx& ctx, const auto& a) {
          auto left = dsl::loadFunctor(ctx.resolve(a[0]));
          auto right = dsl::loadFunctor(ctx.resolve(a[1]));
          auto unit = dsl::loadNatTrans(ctx.resolve(a[2]));
          auto counit = dsl::loadNatTrans(ctx.resolve(a[3]));
          checkAdjunction(left, right, unit, counit);
          return true;
        }}},
      {"check-fibered-adjunction",
       {6, "check-fibered-adjunction P Q LEFT RIGHT UNIT COUNIT",
        [](Ctx& ctx, const auto& a) {
          auto p = mustFibration(dsl::loadFibrationBundle(ctx.resolve(a[0])));
          auto q = mustFibration(dsl::loadFibrationBundle(ctx.resolve(a[1])));
          auto left = dsl::loadFunctor(ctx.resolve(a[2]));
          auto right = dsl::loadFunctor(ctx.resolve(a[3]));
          auto unit = dsl::loadNatTrans(ctx.resolve(a[4]));
          auto counit = dsl::loadNatTrans(ctx.resolve(a[5]));
          auto res = isFiberedAdjunction(p, q, left, right, unit, counit);
          if (auto* v = std::get_if<Violation>(&res)) {
            ctx.witnesses.push_back(
                {{"kind", v->kind}, {"message", v->message}, {"witness", v->witness}});
            return false;
          }
          return true;
        }}},
      {"check-universal-arrow",
       {4, "check-universal-arrow CAT POINT FUNCTOR COMPARISON",
        [](Ctx& ctx, const auto& a) {
          auto c = dsl::loadCategory(ctx.resolve(a[0]));
          auto p = makePointedCat(a[1], c);
          auto f = dsl::loadFunctor(ctx.resolve(a[2]));
          auto t = terminalObject(f.source());
          if (!t)
            throw CatError("NoTerminalObject",
                           "the test domain has no terminal object");
          auto test = makePtdCatMor(makePointedCat(*t, f.source()), p, f, a[3]);
          auto factor = verifyUniversalArrow(p, test, ctx.budget);
          ctx.data = {{"comparison", factor.comparison}};
          return true;
        }}},
  };
  return table;
}

// ---- named propositions ----------------------------------------------------

bool propSliceTerminalEquiv(Ctx& ctx, const std::string& arg) {
  auto c = dsl::loadCategory(ctx.resolve(arg));
  auto eq = sliceTerminalEquiv(c);
  if (!eq.cert.ok) {
    ctx.witnesses.push_back({{"failure", eq.cert.failure}, {"witness", eq.cert.witness}});
    return false;
  }
  return true;
}

bool propSliceOfSlice(Ctx& ctx, const std::string& arg) {
  auto c = dsl::loadCategory(ctx.resolve(arg));
  for (const auto& m : c->morphisms()) {
    auto pair = sliceOfSliceIso(c, m.name);
    auto fwd = composeFunctors(pair.forward, pair.backward);
    auto bwd = composeFunctors(pair.backward, pair.forward);
    if (!(fwd == identityFunctor(pair.forward.source())) ||
        !(bwd == identityFunctor(pair.backward.source()))) {
      ctx.witnesses.push_back({{"morphism", m.name}});
      return false;
    }
  }
  return true;
}

bool propSigmaReindex(Ctx& ctx, const std::string& arg) {
  auto c = dsl::loadCategory(ctx.resolve(arg));
  for (const auto& m : c->morphisms())
    (void)adjunctionSigmaReindex(c, m.name);  // throws on a failing triangle
  ctx.data = {{"morphisms_checked", c->numMors()}};
  return true;
}

bool propSliceTerminalObject(Ctx& ctx, const std::string& arg) {
  auto c = dsl::loadCategory(ctx.resolve(arg));
  for (const auto& a : c->objects()) {
    auto s = buildSlice(c, a);
    auto t = terminalObject(s.carrier);
    if (!t || *t != "id:" + a) {
      ctx.witnesses.push_back({{"object", a}});
      return false;
    }
  }
  return true;
}

bool propCodIffPullbacks(Ctx& ctx, const std::string& arg) {
  auto c = dsl::loadCategory(ctx.resolve(arg));
  auto fib = isFibration(buildArrowCategory(c).codFunctor);
  auto pb = hasPullbacks(c);
  ctx.data = {{"is_fibration", fib.fibration.has_value()},
              {"has_pullbacks", pb.ok}};
  if (fib.fibration.has_value() != pb.ok) return false;
  if (!pb.ok)
    ctx.data["counterexample"] = {{"f", pb.counterexample->f},
                                  {"g", pb.counterexample->g}};
  return true;
}

bool propDomFibration(Ctx& ctx, const std::string& arg) {
  auto c = dsl::loadCategory(ctx.resolve(arg));
  auto res = isFibration(buildArrowCategory(c).domFunctor);
  if (!res.fibration) {
    ctx.witnesses.push_back(res.counterexample);
    return false;
  }
  return true;
}

bool propFiberedPullbacksIffCod(Ctx& ctx, const std::string& arg) {
  auto p = mustFibration(dsl::loadFibrationBundle(ctx.resolve(arg)));
  auto fp = hasFiberedPullbacks(p);
  auto cod = isFibration(verticalCategory(p.proj).codP);
  ctx.data = {{"fibered_pullbacks", fp.ok},
              {"cod_is_fibration", cod.fibration.has_value()}};
  return fp.ok == cod.fibration.has_value();
}

bool propSliceFiberEquiv(Ctx& ctx, const std::string& arg) {
  auto sf = sliceFibration(loadPointed(ctx, arg));
  for (const auto& i : sf.fib.base()->objects()) {
    auto eq = sliceFiberEquiv(sf, i);
    if (!eq.cert.ok) {
      ctx.witnesses.push_back({{"object", i}, {"failure", eq.cert.failure}});
      return false;
    }
  }
  return true;
}

bool propCartesianIffPullback(Ctx& ctx, const std::string& arg) {
  auto sf = sliceFibration(loadPointed(ctx, arg));
  auto mask = cartesianMask(sf.fib.proj);
  for (const auto& m : sf.fib.total()->morphisms()) {
    const bool cart = mask[sf.fib.total()->requireMor(m.name)] != 0;
    if (cart != isPullbackSquare(sf, m.name)) {
      ctx.witnesses.push_back({{"morphism", m.name},
                               {"cartesian", cart},
                               {"pullback_square", !cart}});
      return false;
    }
  }
  return true;
}

bool propTerminallyPointed(Ctx& ctx, const std::string& arg) {
  auto pf = loadPointed(ctx, arg);
  ctx.data = {{"point_fibered", pf.pointFibered}};
  return isTerminallyPointed(pf);
}

bool runProp(Ctx& ctx, const std::string& name, const std::string& arg) {
  static const std::map<std::string,
                        std::function<bool(Ctx&, const std::string&)>>
      props = {{"slice-terminal-equiv", propSliceTerminalEquiv},
               {"slice-of-slice", propSliceOfSlice},
               {"sigma-reindex-adjunction", propSigmaReindex},
               {"slice-terminal-object", propSliceTerminalObject},
               {"cod-fibration-iff-pullbacks", propCodIffPullbacks},
               {"dom-fibration", propDomFibration},
               {"fibered-pullbacks-iff-cod", propFiberedPullbacksIffCod},
               {"slice-fiber-equiv", propSliceFiberEquiv},
               {"cartesian-iff-pullback", propCartesianIffPullback},
               {"terminally-pointed", propTerminallyPointed}};
  auto it = props.find(name);
  if (it == props.end())
    throw CatError("UnknownProposition", "unknown proposition " + name);
  return it->second(ctx, arg);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Ctx ctx;
  std::string reportMode = "text";
  std::vector<std::string> positionals;

  CLI::App app{"finite category kernel"};
  app.add_option("--out", ctx.out, "directory for exported documents");
  app.add_option("--fixtures", ctx.fixtures, "fallback directory for input paths");
  app.add_option("--budget", ctx.budget, "search budget");
  app.add_option("--report", reportMode, "report rendering")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("args", positionals, "command and its arguments");

  json report = {{"command", ""},
                 {"inputs", args},
                 {"verdict", "invalid-input"},
                 {"witnesses", json::array()},
                 {"timings", json::object()}};
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    report["timings"]["total_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    result.exitCode = code;
    result.report = report;
    result.output = reportMode == "json" ? dsl::printCanonical(report)
                                         : renderText(report);
    return result;
  };

  try {
    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    report["witnesses"].push_back({{"kind", "UsageError"}, {"message", e.what()}});
    return finish(2);
  }

  if (positionals.empty()) {
    report["witnesses"].push_back(
        {{"kind", "UsageError"}, {"message", "no command given"}});
    return finish(2);
  }
  const std::string command = positionals.front();
  std::vector<std::string> rest(positionals.begin() + 1, positionals.end());
  report["command"] = command;

  try {
    bool verdict = false;
    if (command == "check-prop") {
      if (rest.size() != 2)
        throw CatError("UsageError", "usage: check-prop NAME INPUT");
      verdict = runProp(ctx, rest[0], rest[1]);
    } else {
      auto it = commandTable().find(command);
      if (it == commandTable().end())
        throw CatError("UsageError", "unknown command " + command);
      if (rest.size() != it->second.arity)
        throw CatError("UsageError", "usage: " + it->second.usage);
      verdict = it->second.handler(ctx, rest);
    }
    report["verdict"] = verdict ? "pass" : "fail";
    report["witnesses"] = ctx.witnesses;
    if (!ctx.data.empty()) report["data"] = ctx.data;
    return finish(verdict ? 0 : 1);
  } catch (const CatError& e) {
    report["witnesses"] = ctx.witnesses;
    report["witnesses"].push_back(
        {{"kind", e.kind}, {"message", e.what()}, {"witness", e.witness}});
    if (isPropertyFailure(e.kind)) {
      report["verdict"] = "fail";
      return finish(1);
    }
    report["verdict"] = "invalid-input";
    return finish(2);
  } catch (const std::exception& e) {
    report["verdict"] = "invalid-input";
    report["witnesses"].push_back({{"kind", "InternalError"}, {"message", e.what()}});
    return finish(2);
  }
}

}  // namespace catfib::cmd
