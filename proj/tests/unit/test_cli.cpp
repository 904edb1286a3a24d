#include <fstream>
#include <sstream>

#include "../../tools/cli.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::string kData = LEAVITT_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = leavitt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Run on(const std::string& graph_file, std::vector<std::string> args) {
  args.push_back("--graph");
  args.push_back(kData + "/" + graph_file);
  return invoke(std::move(args));
}

Run with_spec(const std::string& spec_file, std::vector<std::string> args) {
  args.push_back("--spec");
  args.push_back(kData + "/" + spec_file);
  return invoke(std::move(args));
}

}  // namespace

TEST_CASE("element verbs") {
  CHECK(on("g2loop.txt", {"nf", "1*[v|v]"}).out == "1*[a|a] + 1*[b|b]\n");
  CHECK(on("g2loop.txt", {"nf", "1*[v|v]", "--depth", "0"}).out == "1*[v|v]\n");
  CHECK(on("g2loop.txt", {"mul", "1*[a|b]", "1*[b|v]"}).out == "1*[a|v]\n");
  CHECK(on("g2loop.txt", {"add", "1*[a|a]", "-1*[a|a]"}).out == "0\n");
  CHECK(on("g2loop.txt", {"star", "2+i*[a|v]", "--ring", "gauss"}).out == "2-i*[v|a]\n");
  CHECK(on("g2loop.txt", {"deg", "1*[a.b|a]"}).out == "1\n");
  CHECK(on("g2loop.txt", {"deg", "1*[a|v] + 1*[v|a]"}).out == "mixed\n");
  Run diag = on("g2loop.txt", {"isdiag", "1*[a|a]"});
  CHECK(diag.out == "diagonal\n");
  CHECK(diag.code == 0);
  Run off = on("g2loop.txt", {"isdiag", "1*[a|b]"});
  CHECK(off.out == "not diagonal\n");
  CHECK(off.code == 1);
}

TEST_CASE("action verbs") {
  CHECK(on("g2loop.txt", {"isnorm", "1*[a|b]"}).code == 0);
  Run no = on("g2loop.txt", {"isnorm", "1*[a|v] + 1*[b|v]"});
  CHECK(no.out == "not a normalizer\n");
  CHECK(no.code == 1);
  CHECK(on("g2loop.txt", {"alpha", "1*[a|b]"}).out == "b -> a\n");
  CHECK(on("g2loop.txt", {"alpha", "1*[a|b]", "b(a)^inf"}).out == "(a)^inf\n");
  CHECK(on("g2loop.txt", {"dom", "1*[a|b]"}).out == "{b}\n");
  CHECK(on("g2loop.txt", {"ran", "1*[a|b]"}).out == "{a}\n");
  CHECK(on("gloop.txt", {"compress", "(e)^inf", "-3*[e|v]"}).out == "r=-3 k=1\n");
  CHECK(on("gcycle2.txt", {"compress", "(e.f)^inf", "1*[f|f]"}).out == "0\n");
}

TEST_CASE("weyl verbs") {
  Run eq = on("gloop.txt", {"weyl-eq", "1*[e|v]", "(e)^inf", "1*[e.e|e]", "(e)^inf"});
  CHECK(eq.out == "equivalent\n");
  CHECK(eq.code == 0);
  CHECK(on("gloop.txt", {"weyl-eq", "1*[e|v]", "(e)^inf", "1*[v|v]", "(e)^inf"}).code == 1);
  CHECK(on("gloop.txt", {"phi", "(e)^inf", "1", "(e)^inf"}).out == "1*[e|v] @ (e)^inf\n");
  CHECK(on("g2loop.txt", {"phi", "(a)^inf", "0", "(b)^inf"}).code == 2);
  CHECK(on("g2loop.txt", {"phi", "(a)^inf", "x", "(a)^inf"}).code == 2);
  CHECK(on("gloop.txt", {"phi-inv", "2*[e.e|e]", "(e)^inf"}).out == "((e)^inf, 1, (e)^inf)\n");
}

TEST_CASE("stone and kappa verbs") {
  CHECK(with_spec("swap-2loop.iso", {"kappa", "a.b(a)^inf"}).out == "b.a(b)^inf\n");
  Run pair = on("g2loop.txt", {"stone-check", "{a}", "{a.b}"});
  CHECK(pair.out == "meet = {a.b}\njoin = {a}\ndifference = {a.a}\nleq = false\n");
  Run one = on("g2loop.txt", {"stone-check", "{a}"});
  CHECK(one.out == "set = {a}\nidempotent = 1*[a|a]\ncomplement = {b}\n");
  Run id = with_spec("identity-cycle2e.iso", {"stone-check"});
  CHECK(id.code == 0);
  CHECK(id.out.rfind("PASS kappa-linearity\nPASS kappa-iff cases=", 0) == 0);
  Run twisted = with_spec("conjugation-2loop.iso", {"stone-check"});
  CHECK(twisted.code == 1);
  CHECK(twisted.out.find("FAIL kappa-linearity: d = i*[v|v]") == 0);
  CHECK(twisted.out.find("PASS kappa-iff") != std::string::npos);
}

TEST_CASE("iso verbs") {
  Run pass = with_spec("swap-cycle2.iso", {"verify-iso"});
  CHECK(pass.code == 0);
  CHECK(pass.out == "PASS verify-iso: 88 checks at depth 4\n");
  Run dup = with_spec("duplicate-2loop.iso", {"verify-iso"});
  CHECK(dup.code == 1);
  CHECK(dup.out.find("FAIL L3 (forward) pi(s_a^*) pi(s_b): pi(s_a^*) pi(s_b) = 1*[v|v], expected 0\n") == 0);
  CHECK(dup.out.find("FAIL verify-iso: 7 of 116 checks failed at depth 4\n") != std::string::npos);
  Run nondiag = with_spec("nondiagonal-2loop.iso", {"verify-iso"});
  CHECK(nondiag.code == 1);
  CHECK(nondiag.out.find("FAIL diagonal (forward) pi(1_Z(a))") != std::string::npos);
}

TEST_CASE("groupoid iso verbs round trip") {
  Run omega = with_spec("swap-2loop.iso", {"induce-groupoid-iso", "--depth", "2"});
  REQUIRE(omega.code == 0);
  std::ifstream saved(kData + "/swap-2loop.omega");
  std::stringstream text;
  text << saved.rdbuf();
  CHECK(omega.out == text.str());

  Run pi = with_spec("rename-cycle2e.omega", {"pi-from-omega"});
  REQUIRE(pi.code == 0);
  std::ifstream iso(kData + "/rename-cycle2e.iso");
  std::stringstream expected;
  expected << iso.rdbuf();
  CHECK(pi.out == expected.str());
}

TEST_CASE("property suites") {
  Run run = on("gloop.txt", {"check-props", "--suite", "weyl", "--seed", "3"});
  CHECK(run.code == 0);
  CHECK(run.out.find("PASS suite=weyl seed=3: 3/3 properties") != std::string::npos);
  CHECK(on("gloop.txt", {"check-props", "--suite", "nope"}).code == 2);
}

TEST_CASE("reports are deterministic") {
  auto props = [] { return on("gcycle2e.txt", {"check-props", "--suite", "action", "--seed", "9"}).out; };
  CHECK(props() == props());
  auto omega = [] { return with_spec("swap-cycle2.iso", {"induce-groupoid-iso", "--depth", "2"}).out; };
  CHECK(omega() == omega());
}

TEST_CASE("bad input exits with 2 and a message") {
  Run parse = on("g2loop.txt", {"nf", "1*[a|q]"});
  CHECK(parse.code == 2);
  CHECK(parse.err.rfind("error: Parse", 0) == 0);
  CHECK(invoke({"nf", "1*[v|v]"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(on("g2loop.txt", {"mul", "1*[a|a]"}).code == 2);
  CHECK(on("g2loop.txt", {"nf", "1*[v|v]", "--ring", "reals"}).code == 2);
  CHECK(with_spec("missing.iso", {"verify-iso"}).code == 2);
  Run bad_graph = invoke({"nf", "1*[v|v]", "--graph", kData + "/swap-2loop.iso"});
  CHECK(bad_graph.code == 2);
  CHECK(bad_graph.err.find("line 1") != std::string::npos);
}
