#include "catfib.h"

#include <cstring>
#include <string>
#include <vector>

#include "catfib/commands.hpp"
#include "catfib/dsl.hpp"

using namespace catfib;

struct cf_report {
  int exit_code = 2;
  std::string output;
  std::string json_text;
};

struct cf_category {
  CatPtr cat;
};

namespace {

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cf_report* makeReport(int code, const json& report, const std::string& output) {
  auto* r = new cf_report;
  r->exit_code = code;
  r->output = output;
  r->json_text = dsl::printCanonical(report);
  return r;
}

cf_report* errorReport(const CatError& e) {
  json report = {{"command", ""},
                 {"inputs", json::array()},
                 {"verdict", "invalid-input"},
                 {"witnesses",
                  json::array({{{"kind", e.kind},
                                {"message", e.what()},
                                {"witness", e.witness}}})},
                 {"timings", json::object()}};
  return makeReport(2, report, std::string(e.what()) + "\n");
}

}  // namespace

extern "C" {

const char* cf_version(void) { return "1.0.0"; }

void cf_string_free(char* s) { std::free(s); }

cf_status cf_run(int argc, const char* const* argv, cf_report** out) {
  if (!out) return CF_INTERNAL_ERROR;
  *out = nullptr;
  try {
    std::vector<std::string> args;
    args.reserve(argc < 0 ? 0 : static_cast<std::size_t>(argc));
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i] ? argv[i] : "");
    auto res = cmd::run(args);
    *out = makeReport(res.exitCode, res.report, res.output);
    return static_cast<cf_status>(res.exitCode);
  } catch (...) {
    return CF_INTERNAL_ERROR;
  }
}

int cf_report_exit_code(const cf_report* r) { return r ? r->exit_code : 2; }

const char* cf_report_output(const cf_report* r) {
  return r ? r->output.c_str() : "";
}

const char* cf_report_json(const cf_report* r) {
  return r ? r->json_text.c_str() : "";
}

void cf_report_free(cf_report* r) { delete r; }

cf_status cf_category_load(const char* json_text, cf_category** out, cf_report** err) {
  if (!out) return CF_INTERNAL_ERROR;
  *out = nullptr;
  if (err) *err = nullptr;
  if (!json_text) return CF_INVALID_INPUT;
  try {
    auto doc = json::parse(json_text);
    auto cat = FinCat::mustValidate(dsl::categoryFromJson(doc));
    *out = new cf_category{std::move(cat)};
    return CF_OK;
  } catch (const CatError& e) {
    if (err) *err = errorReport(e);
    return CF_INVALID_INPUT;
  } catch (const json::exception& e) {
    if (err)
      *err = errorReport(CatError("SyntaxError", e.what()));
    return CF_INVALID_INPUT;
  } catch (...) {
    return CF_INTERNAL_ERROR;
  }
}

cf_status cf_category_canonical(const cf_category* c, char** out_text) {
  if (!c || !out_text) return CF_INVALID_INPUT;
  try {
    *out_text = dupString(dsl::printCanonical(dsl::categoryToJson(c->cat->toRaw())));
    return *out_text ? CF_OK : CF_INTERNAL_ERROR;
  } catch (...) {
    return CF_INTERNAL_ERROR;
  }
}

size_t cf_category_num_objects(const cf_category* c) {
  return c ? c->cat->numObjects() : 0;
}

size_t cf_category_num_morphisms(const cf_category* c) {
  return c ? c->cat->numMors() : 0;
}

cf_status cf_category_compose(const cf_category* c, const char* f, const char* g,
                              char** result) {
  if (!c || !f || !g || !result) return CF_INVALID_INPUT;
  *result = nullptr;
  try {
    *result = dupString(c->cat->composeName(f, g));
    return *result ? CF_OK : CF_INTERNAL_ERROR;
  } catch (const CatError&) {
    return CF_INVALID_INPUT;
  } catch (...) {
    return CF_INTERNAL_ERROR;
  }
}

void cf_category_free(cf_category* c) { delete c; }

}  // extern "C"
