#include "catfib/fixtures.hpp"

namespace catfib::fixtures {

namespace {

CatPtr build(RawCategory raw) { return FinCat::mustValidate(raw); }

}  // namespace

CatPtr one() {
  static CatPtr c = build({"One", {"pt"}, {}, {}});
  return c;
}

CatPtr two() {
  static CatPtr c = build({"Two", {"a", "b"}, {{"f", "a", "b"}}, {}});
  return c;
}

CatPtr cospan() {
  static CatPtr c =
      build({"Cospan", {"c", "x", "y"}, {{"f", "x", "c"}, {"g", "y", "c"}}, {}});
  return c;
}

CatPtr span() {
  static CatPtr c =
      build({"Span", {"s", "x", "y"}, {{"f", "s", "x"}, {"g", "s", "y"}}, {}});
  return c;
}

CatPtr pset() {
  static CatPtr c = build({"PSet",
                           {"e", "1", "2", "12"},
                           {{"e1", "e", "1"},
                            {"e2", "e", "2"},
                            {"e12", "e", "12"},
                            {"1_12", "1", "12"},
                            {"2_12", "2", "12"}},
                           {{{"e1", "1_12", "e12"}}, {{"e2", "2_12", "e12"}}}});
  return c;
}

CatPtr discrete2() {
  static CatPtr c = build({"Discrete2", {"a", "b"}, {}, {}});
  return c;
}

CatPtr monoid3() {
  static CatPtr c = build({"Monoid3",
                           {"m"},
                           {{"s", "m", "m"}, {"t", "m", "m"}},
                           {{{"s", "s", "s"}},
                            {{"s", "t", "t"}},
                            {{"t", "s", "s"}},
                            {{"t", "t", "t"}}}});
  return c;
}

std::vector<CatPtr> corpus() {
  return {one(), two(), cospan(), span(), pset(), discrete2(), monoid3()};
}

}  // namespace catfib::fixtures
