#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "catch_amalgamated.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ITDIST_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return Run{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string fixture(const std::string& name) {
  return std::string(ITDIST_FIXTURES) + "/" + name + ".gset";
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("series summary", "[cli]") {
  Run r = run("series --theory rig --generators 1 --bound 3");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "PASS: 4 monads, 6 laws, 4 YB triples"));
  CHECK(r.out.find("CHECK rig.yb(4,3,2) PASS") != std::string::npos);
  Run ring = run("series --theory ring3 --bound 2");
  CHECK(ring.status == 0);
  CHECK(has_line(ring.out, "PASS: 3 monads, 3 laws, 1 YB triples"));
}

TEST_CASE("normalize", "[cli]") {
  Run r = run("normalize --theory ring3 \"(a+b)*(c+d)\"");
  CHECK(r.status == 0);
  CHECK(r.out == "a*c + a*d + b*c + b*d\n");
  CHECK(run("normalize --theory rig \"a*0 + b\"").out == "b\n");
  CHECK(run("normalize --theory ring2 --names d,c,b,a \"(a+b)*(c+d)\"").status == 0);
  Run term = run("normalize --theory monoid --term \"a*1*b\"");
  CHECK(term.out == "a*b\nPt(NESeq[a,b])\n");
}

TEST_CASE("normalization errors exit 1", "[cli]") {
  CHECK(run("normalize --theory rig -- \"-a\"").status == 1);
  CHECK(run("normalize --theory ring3 \"(a+\"").status == 1);
  CHECK(run("normalize --theory ring3 --names a \"a*b\"").status == 1);
}

TEST_CASE("ncat with oracle", "[cli]") {
  Run r = run("ncat --input " + fixture("two_cell") + " --bound 2 --compare-oracle");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "dim 0: 2"));
  CHECK(has_line(r.out, "dim 1: 4"));
  CHECK(has_line(r.out, "dim 2: 5"));
  CHECK(has_line(r.out, "ORACLE MATCH"));
  Run laws = run("ncat --input " + fixture("three_cell") + " --check-laws");
  CHECK(laws.status == 0);
  CHECK(laws.out.find("CHECK interchange.yb(2,1,0) PASS") != std::string::npos);
}

TEST_CASE("oracle-compare", "[cli]") {
  Run r = run("oracle-compare " + fixture("arrow") + " " + fixture("parallel"));
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "MATCH arrow.gset free_ncat=[2 3] oracle=[2 3]"));
}

TEST_CASE("law suites", "[cli]") {
  Run laws = run("laws");
  CHECK(laws.status == 0);
  CHECK(laws.out.find("CHECK Adjoin-0.laws PASS") != std::string::npos);
  Run broken = run("laws --monad BrokenFreeMonoid");
  CHECK(broken.status == 1);
  CHECK(broken.out.find("FAIL") != std::string::npos);
  CHECK(broken.out.find("witness=") != std::string::npos);

  Run law = run("distlaw --law ring3.AB --bound 2 --generators 1");
  CHECK(law.status == 0);
  CHECK(law.out.find("CHECK ring3.AB.mult-outer PASS") != std::string::npos);
  CHECK(run("distlaw --law identity.FreeMonoid.FreeAbelianGroup --bound 2").status == 1);
  CHECK(run("yang-baxter --theory ring3 --bound 2").status == 0);
  CHECK(run("yang-baxter --theory rig --triple 4,2,1 --bound 2").status == 0);
  Run routes = run("routes --theory rig --bound 2 --route \"(1,(2,(3,4)))\" --route "
                   "\"((1,2),(3,4))\"");
  CHECK(routes.status == 0);
  CHECK(routes.out == "CHECK rig.route((1,2),(3,4))~(1,(2,(3,4))) PASS checked=" +
                          routes.out.substr(routes.out.rfind('=') + 1));
}

TEST_CASE("usage errors exit 2", "[cli]") {
  CHECK(run("series --theory field").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("laws --monad Nope").status == 2);
  CHECK(run("distlaw --law nope").status == 2);
  CHECK(run("laws --generators 2 --names a,b").status == 2);
  CHECK(run("routes --theory ring3 --route \"(1,2)\"").status == 2);
  CHECK(run("yang-baxter --theory ring3 --triple 1,2,3").status == 2);
  CHECK(run("ncat --input " + fixture("broken")).status == 2);
  CHECK(run("ncat --input /nonexistent.gset").status == 2);

  auto path = std::filesystem::temp_directory_path() / "itdist_malformed.gset";
  std::ofstream(path) << "{\"n\": 1, \"cells\": ";
  CHECK(run("ncat --input " + path.string()).status == 2);
  std::filesystem::remove(path);
}

TEST_CASE("output is deterministic", "[cli]") {
  std::string args = "distlaw --law rig.AB --law rig.CD --bound 2";
  Run a = run(args);
  Run b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run("ncat --input " + fixture("parallel")).out ==
        run("ncat --input " + fixture("parallel")).out);
}
