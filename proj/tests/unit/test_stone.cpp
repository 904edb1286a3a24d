#include "leavitt/sampling.hpp"
#include "leavitt/stone.hpp"
#include "support.hpp"

using namespace testing;

namespace {

CompactOpen set(const std::string& g, const std::string& text) { return parse_compact_open(graph(g), text); }
std::string fmt(const CompactOpen& s) { return format_compact_open(s); }

CorpusEntry entry(const std::string& name) {
  for (CorpusEntry& e : corpus()) {
    if (e.name == name) return e;
  }
  FAIL("no corpus entry " << name);
  return corpus().front();
}

// Membership at a lasso, read off its unrolling.
bool member_oracle(const std::string& g, const std::vector<std::string>& prefixes, const Lasso& x) {
  for (const std::string& p : prefixes) {
    Path path = pa(g, p);
    if (path.length() == 0 ? x.range() == path.source() : x.starts_with(path)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("compact open canonical form") {
  CHECK(fmt(set("2loop", "{a.a, a.b}")) == "{a}");
  CHECK(fmt(set("2loop", "{a, b}")) == "{v}");
  CHECK(fmt(set("2loop", "{a, a.b}")) == "{a}");
  CHECK(fmt(set("2loop", "{}")) == "{}");
  CHECK(CompactOpen::whole(graph("cycle2e")) == set("cycle2e", "{u, v, w}"));
  CHECK(error_kind([] { set("2loop", "{a, q}"); }) == ErrorKind::Parse);
}

TEST_CASE("boolean operations") {
  CHECK(fmt(meet(set("2loop", "{a}"), set("2loop", "{a.b}"))) == "{a.b}");
  CHECK(fmt(join(set("2loop", "{a}"), set("2loop", "{b}"))) == "{v}");
  CHECK(fmt(difference(set("2loop", "{v}"), set("2loop", "{a.b}"))) == "{a.a, b}");
  CHECK(leq(set("2loop", "{a.b}"), set("2loop", "{a}")));
  CHECK_FALSE(leq(set("2loop", "{a}"), set("2loop", "{a.b}")));
  CHECK(meet(set("cycle2e", "{e}"), set("cycle2e", "{g}")).is_empty());
}

TEST_CASE("boolean operations agree with pointwise membership") {
  const std::vector<std::string> first{"a", "b.a"};
  const std::vector<std::string> second{"a.a", "b"};
  CompactOpen a = set("2loop", "{a, b.a}");
  CompactOpen b = set("2loop", "{a.a, b}");
  for (const Lasso& x : lassos_up_to(*graph("2loop"), 5)) {
    bool in_a = member_oracle("2loop", first, x);
    bool in_b = member_oracle("2loop", second, x);
    CHECK(a.contains(x) == in_a);
    CHECK(meet(a, b).contains(x) == (in_a && in_b));
    CHECK(join(a, b).contains(x) == (in_a || in_b));
    CHECK(difference(a, b).contains(x) == (in_a && !in_b));
  }
}

TEST_CASE("idempotents and sets") {
  CHECK(fmt(idempotent_to_set(el("2loop", "1*[a|a]"))) == "{a}");
  CHECK(error_kind([] { idempotent_to_set(el("2loop", "2*[a|a]")); }) == ErrorKind::NotIdempotent);
  CHECK(error_kind([] { idempotent_to_set(el("2loop", "1*[a|b]")); }) == ErrorKind::NotIdempotent);
  CHECK(set_to_idempotent(set("2loop", "{a, b}"), Ring::Integer) == el("2loop", "1*[v|v]"));
  CHECK(fmt(support_set(el("2loop", "3*[a|a] + -1*[b.b|b.b]"))) == "{a, b.b}");

  Sampler sampler(graph("cycle2e"), Ring::Integer, 12);
  for (int i = 0; i < 50; ++i) {
    std::vector<Path> prefixes;
    for (std::size_t k = sampler.below(4); k > 0; --k) prefixes.push_back(sampler.path(3));
    CompactOpen s = CompactOpen::make(graph("cycle2e"), prefixes);
    Element d = set_to_idempotent(s, Ring::Integer);
    REQUIRE(d * d == d);
    REQUIRE(idempotent_to_set(d) == s);
  }
}

TEST_CASE("filter chains") {
  FilterChain chain(graph("2loop"), ls("2loop", "a(b)^inf"));
  CHECK(fmt(chain.basis(0)) == "{v}");
  CHECK(fmt(chain.basis(3)) == "{a.b.b}");
  CHECK(chain.contains(set("2loop", "{a}")));
  CHECK_FALSE(chain.contains(set("2loop", "{a.a}")));
  CHECK(fmt("2loop", rho_inverse(chain)) == "a(b)^inf");
}

TEST_CASE("kappa on identity and relabel specs") {
  VerifiedIso id = VerifiedIso::verify(identity_spec(graph("cycle2e"), Ring::Integer), 3);
  for (const Lasso& x : lassos_up_to(*graph("cycle2e"), 4)) CHECK(induce_kappa(id, x) == x);

  VerifiedIso swap = VerifiedIso::verify(entry("swap-2loop").spec, 3);
  CHECK(fmt("2loop", induce_kappa(swap, ls("2loop", "a.b(a)^inf"))) == "b.a(b)^inf");
  CHECK(fmt("2loop", induce_kappa(swap, ls("2loop", "(a.b)^inf"))) == "(b.a)^inf");

  CorpusEntry rename = entry("rename-cycle2e");
  VerifiedIso iso = VerifiedIso::verify(rename.spec, 3);
  for (const Lasso& x : lassos_up_to(*graph("cycle2e"), 4)) {
    CHECK(induce_kappa(iso, x) == relabel_lasso(*rename.spec.target, *rename.relabel, x));
  }
}

TEST_CASE("kappa of the loop inversion") {
  // Oracle: s_e and s_e^* trade places, so Z(e^n) goes to itself and the
  // single point is fixed.
  VerifiedIso inv = VerifiedIso::verify(entry("inversion-loop").spec, 3);
  CHECK(fmt("loop", induce_kappa(inv, ls("loop", "(e)^inf"))) == "(e)^inf");
}

TEST_CASE("kappa linearity") {
  CHECK(check_kappa_linearity(VerifiedIso::verify(identity_spec(graph("2loop"), Ring::Integer), 3), 3).holds);
  CHECK(check_kappa_linearity(VerifiedIso::verify(entry("rename-cycle2e").spec, 3), 3).holds);
  CHECK(check_kappa_linearity(VerifiedIso::verify(entry("swap-cycle2").spec, 3), 3).holds);

  // Conjugating coefficients cannot commute with evaluation at points.
  LinearityCheck twisted = check_kappa_linearity(VerifiedIso::verify(entry("conjugation-2loop").spec, 3), 3);
  CHECK_FALSE(twisted.holds);
  CHECK(twisted.witness == "d = i*[v|v], x = (a)^inf: pi(d)(kappa(x)) = -i, d(x) = i");
}

TEST_CASE("kappa search cap") {
  const Graph& g = *graph("cycle2e");
  Lasso x = ls("cycle2e", "e.g(h)^inf");
  // 4 (3 + 4 + 2 + 1).
  CHECK(kappa_cap(g, x) == 40);
  VerifiedIso id = VerifiedIso::verify(identity_spec(graph("cycle2e"), Ring::Integer), 3);
  CHECK(error_kind([&] { induce_kappa(id, ls("cycle2e", "(e.f)^inf"), 0); }) == ErrorKind::NoStabilization);
}
