#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_bin;
std::string g_fixtures;

struct RunResult {
  int exitCode = -1;
  std::string out;
};

RunResult runCli(const std::string& args) {
  const std::string cmd = g_bin + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fix(const std::string& name) { return g_fixtures + "/" + name; }

}  // namespace

TEST_CASE("validate succeeds on the fixture corpus") {
  for (const std::string name :
       {"one", "two", "cospan", "span", "pset", "discrete2", "monoid3"}) {
    auto r = runCli("validate " + fix(name + ".cat.json"));
    CHECK(r.exitCode == 0);
  }
}

TEST_CASE("property failures exit 1 with a witness") {
  auto r = runCli("is-fibration " + fix("cod-cospan.bundle.json"));
  CHECK(r.exitCode == 1);
  CHECK(r.out.find("witness") != std::string::npos);
  CHECK(runCli("is-fibration " + fix("cod-pset.bundle.json")).exitCode == 0);
}

TEST_CASE("the fixtures flag resolves bare names") {
  auto r = runCli("is-fibration pi1-two-pset.bundle.json --fixtures " + g_fixtures);
  CHECK(r.exitCode == 0);
}

TEST_CASE("malformed input exits 2 with a located error") {
  auto p = std::filesystem::temp_directory_path() / "catfib-cli-bad.json";
  std::ofstream(p) << "{\n  \"name\": oops\n}\n";
  auto r = runCli("validate " + p.string() + " --report json");
  CHECK(r.exitCode == 2);
  CHECK(r.out.find("SyntaxError") != std::string::npos);
  CHECK(r.out.find("\"line\"") != std::string::npos);
}

TEST_CASE("unknown commands and bad usage exit 2") {
  CHECK(runCli("frobnicate x").exitCode == 2);
  CHECK(runCli("slice " + fix("pset.cat.json")).exitCode == 2);
  CHECK(runCli("").exitCode == 2);
}

TEST_CASE("json reports carry the structured fields") {
  auto r = runCli("terminal " + fix("pset.cat.json") + " --report json");
  CHECK(r.exitCode == 0);
  for (const std::string key : {"command", "inputs", "verdict", "witnesses", "timings"})
    CHECK(r.out.find("\"" + key + "\"") != std::string::npos);
  CHECK(r.out.find("\"terminal\": \"12\"") != std::string::npos);
}

TEST_CASE("pullback reports the canonical cone") {
  auto r = runCli("pullback " + fix("pset.cat.json") + " 1_12 2_12 --report json");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("\"apex\": \"e\"") != std::string::npos);
  CHECK(runCli("pullback " + fix("cospan.cat.json") + " f g").exitCode == 1);
}

TEST_CASE("named propositions run from the command line") {
  CHECK(runCli("check-prop slice-of-slice " + fix("two.cat.json")).exitCode == 0);
  CHECK(runCli("check-prop sigma-reindex-adjunction " + fix("pset.cat.json")).exitCode ==
        0);
  CHECK(runCli("check-prop cod-fibration-iff-pullbacks " + fix("cospan.cat.json"))
            .exitCode == 0);
  CHECK(runCli("check-prop terminally-pointed " + fix("pi1-kappa12.ptd.json"))
            .exitCode == 0);
  CHECK(runCli("check-prop terminally-pointed " + fix("pi1-diag.ptd.json")).exitCode ==
        1);
  CHECK(runCli("check-prop no-such-prop " + fix("two.cat.json")).exitCode == 2);
}

TEST_CASE("exports re-validate when re-imported") {
  auto out = std::filesystem::temp_directory_path() / "catfib-cli-out";
  std::filesystem::remove_all(out);
  auto r = runCli("slice-fibration " + fix("pi1-diag.ptd.json") + " --out " +
                  out.string());
  CHECK(r.exitCode == 0);
  CHECK(runCli("validate " + (out / "slicefib-total.cat.json").string()).exitCode == 0);
  // The re-imported bundle is a fibration with a terminally pointed point.
  CHECK(runCli("is-fibration " + (out / "slicefib.bundle.json").string()).exitCode ==
        0);
  CHECK(runCli("check-prop terminally-pointed " + (out / "slicefib.ptd.json").string())
            .exitCode == 0);
}

int main(int argc, char** argv) {
  // The binary path and the fixtures directory are the two trailing arguments.
  if (argc >= 3) {
    g_bin = argv[argc - 2];
    g_fixtures = argv[argc - 1];
  }
  doctest::Context context;
  context.applyCommandLine(argc >= 3 ? argc - 2 : argc, argv);
  return context.run();
}
