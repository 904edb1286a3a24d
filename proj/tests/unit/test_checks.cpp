#include "leavitt/checks.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("property results") {
  PropertyResult r{"demo", 0, 0, {}, {}};
  r.check(true, "first");
  r.check(false, "second");
  r.check(false, "third");
  CHECK(r.cases == 3);
  CHECK(r.failures == 2);
  CHECK(r.first_failure == "second");
  PropertyResult ok{"demo", 4, 0, {}, {}};
  PropertyResult all = merge("demo", {ok, r});
  CHECK(all.cases == 7);
  CHECK(all.failures == 2);
  CHECK(all.first_failure == "demo: second");
}

TEST_CASE("convolution oracle on examples") {
  Element ab = el("2loop", "1*[a|b]");
  Element bv = el("2loop", "1*[b|v]");
  // (ab * bv)(a x, 1, x) sums over factorizations; only (ax, 0, bx)(bx, 1, x) counts.
  CHECK(convolution_oracle(ab, bv, ar("2loop", "(a(a)^inf, 1, (a)^inf)")) == Scalar::one(Ring::Integer));
  CHECK(convolution_oracle(ab, bv, ar("2loop", "(b(a)^inf, 1, (a)^inf)")).is_zero());
  Element f = el("2loop", "2*[v|v] + 3*[a|b]");
  CHECK(convolution_oracle(f, f, ar("2loop", "(a(b)^inf, 0, b(b)^inf)")) == Scalar(Ring::Integer, 12));
}

TEST_CASE("support arrows") {
  Element f = el("2loop", "1*[a|b] + 1*[a.a|b]");
  auto arrows = support_arrows_at(f, ls("2loop", "(b)^inf"));
  REQUIRE(arrows.size() == 2);
  CHECK(support_arrows_at(f, ls("2loop", "(a)^inf")).empty());
}

TEST_CASE("normalizer oracle") {
  CHECK(normalizer_oracle(el("2loop", "1*[a|b]"), 3));
  CHECK(normalizer_oracle(el("2loop", "2*[a|a] + 1*[b|b]"), 3));
  CHECK_FALSE(normalizer_oracle(el("2loop", "1*[a|v] + 1*[b|v]"), 3));
  CHECK_FALSE(normalizer_oracle(el("2loop", "1*[a|v] + 1*[a|a]"), 3));
}

TEST_CASE("germ oracle") {
  const Graph& g = *graph("2loop");
  auto lassos = lassos_up_to(g, 6);
  Lasso x = ls("2loop", "b(a)^inf");
  RewriteRule ab{pa("2loop", "b"), pa("2loop", "a")};
  RewriteRule refined{pa("2loop", "b.a"), pa("2loop", "a.a")};
  RewriteRule other{pa("2loop", "b"), pa("2loop", "a.a")};
  CHECK(germ_oracle(g, ab, refined, x, lassos));
  CHECK_FALSE(germ_oracle(g, ab, other, x, lassos));
  CHECK(germs_agree(g, ab, refined, x));
  CHECK_FALSE(germs_agree(g, ab, other, x));
}

TEST_CASE("Leavitt relations of the canonical family") {
  for (const std::string& name : reference_graph_names()) {
    for (Ring ring : {Ring::Integer, Ring::Gaussian}) CHECK(check_leavitt_family(graph(name), ring).passed());
  }
}

TEST_CASE("negative controls are recognised") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.rejected_by) continue;
    PropertyResult r = check_negative_control(e);
    CAPTURE(r.first_failure);
    CHECK(r.passed());
  }
}

TEST_CASE("the oracle suite passes on the smallest graph") {
  for (const PropertyResult& r : run_suite("oracle", graph("loop"), Ring::Integer, 7)) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.passed());
    // Every point of the loop is isolated, so there are no germs to compare.
    CHECK((r.cases == 0) == (r.name == "germ-reduction"));
  }
}

TEST_CASE("suites") {
  const auto& names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "all") != names.end());
  CHECK(std::find(names.begin(), names.end(), "stone") != names.end());
  CHECK(error_kind([] { run_suite("nonsense", graph("loop"), Ring::Integer, 7); }) == ErrorKind::Invalid);
  auto results = run_suite("algebra", graph("loop"), Ring::Integer, 3);
  CHECK(std::is_sorted(results.begin(), results.end(),
                       [](const PropertyResult& a, const PropertyResult& b) { return a.name < b.name; }));
}

TEST_CASE("branch counts") {
  // Each sample inverts twice: once after phi, once on a sampled class.
  BranchCounts two = phi_inverse_branches(graph("2loop"), Ring::Integer, 7, 60);
  CHECK(two.non_isolated == 120);
  CHECK(two.isolated_periodic == 0);
  BranchCounts loop = phi_inverse_branches(graph("loop"), Ring::Integer, 7, 60);
  CHECK(loop.isolated_periodic == 120);
  BranchCounts mixed = phi_inverse_branches(graph("cycle2e"), Ring::Integer, 7, 200);
  CHECK(mixed.non_isolated > 0);
  CHECK(mixed.isolated_periodic > 0);
  CHECK(mixed.isolated_aperiodic == 0);
}
