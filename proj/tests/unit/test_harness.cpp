#include "leavitt/harness.hpp"
#include "leavitt/sampling.hpp"
#include "support.hpp"

using namespace testing;

namespace {

CorpusEntry entry(const std::string& name) {
  for (CorpusEntry& e : corpus()) {
    if (e.name == name) return e;
  }
  FAIL("no corpus entry " << name);
  return corpus().front();
}

std::string fmt(const Graph& g, const std::vector<Cylinder>& cs) {
  std::string out;
  for (const Cylinder& c : cs) {
    out += (out.empty() ? "" : ", ") + std::string("[") + format_path(g, c.range_path) + "|" +
           format_path(g, c.source_path) + "]";
  }
  return out;
}

}  // namespace

TEST_CASE("cylinder enumeration") {
  // Oracle: pairs of paths with a common source; 2loop has 1 + 2 + 4 paths
  // of length <= 2, all with source v.
  CHECK(cylinders_up_to(*graph("2loop"), 2).size() == 49);
  // cycle2: u and v each start 1 + 1 + 1 paths of length <= 2.
  CHECK(cylinders_up_to(*graph("cycle2"), 2).size() == 18);
}

TEST_CASE("relabel validation") {
  const Graph& g = *graph("2loop");
  CHECK_NOTHROW(validate_relabel(g, g, relabel_by_names(g, g, {{"a", "b"}, {"b", "a"}})));
  CHECK(error_kind([&] { validate_relabel(g, g, relabel_by_names(g, g, {{"a", "b"}})); }) == ErrorKind::Invalid);
  GraphRelabel bad{{0}, {0, 0}};
  CHECK(error_kind([&] { validate_relabel(g, g, bad); }) == ErrorKind::Invalid);
  const Graph& c = *graph("cycle2");
  // Swapping the vertices without the edges breaks range and source.
  CHECK(error_kind([&] { validate_relabel(c, c, relabel_by_names(c, c, {{"u", "v"}, {"v", "u"}})); }) ==
        ErrorKind::Invalid);
}

TEST_CASE("relabel tables") {
  const GraphPtr& g = graph("2loop");
  GraphRelabel swap = relabel_by_names(*g, *g, {{"a", "b"}, {"b", "a"}});
  GroupoidIsoSpec spec = groupoid_iso_from_relabel(g, g, swap, 2);
  CHECK(fmt(*g, spec.forward.at(parse_cylinder(*g, "[a.b|v]"))) == "[b.a|v]");
  CHECK(fmt(*g, spec.backward.at(parse_cylinder(*g, "[v|b]"))) == "[v|a]");
  CHECK(fmt("2loop", evaluate_groupoid_iso(spec, ar("2loop", "(a(b)^inf, 1, (b)^inf)"))) ==
        "(b(a)^inf, 1, (a)^inf)");
}

TEST_CASE("table evaluation without a relabel") {
  const GraphPtr& g = graph("2loop");
  GraphRelabel swap = relabel_by_names(*g, *g, {{"a", "b"}, {"b", "a"}});
  GroupoidIsoSpec spec = groupoid_iso_from_relabel(g, g, swap, 3);
  spec.relabel.reset();
  Sampler sampler(g, Ring::Integer, 3);
  for (int i = 0; i < 50; ++i) {
    Arrow a = sampler.arrow(2, 1);
    if (table_reach(*g, a) > 3) continue;
    Arrow expected{relabel_lasso(*g, swap, a.range), a.lag, relabel_lasso(*g, swap, a.source)};
    REQUIRE(evaluate_groupoid_iso(spec, a) == expected);
    REQUIRE(evaluate_groupoid_iso_inverse(spec, expected) == a);
  }
  CHECK(error_kind([&] { evaluate_groupoid_iso(spec, ar("2loop", "(a.a.a.b(a)^inf, 0, b.b.b.b(a)^inf)")); }) ==
        ErrorKind::Invalid);
}

TEST_CASE("homomorphism checks catch a broken map") {
  const GraphPtr& g = graph("2loop");
  ArrowMap id = [](const Arrow& a) { return a; };
  CHECK(check_groupoid_iso(g, id, id, 50, 1).passed());
  // Collapsing every arrow to its range unit loses the lag.
  ArrowMap drop_lag = [](const Arrow& a) { return unit_arrow(a.range); };
  HomomorphismReport report = check_groupoid_iso(g, drop_lag, id, 50, 1);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.first_failure.empty());
}

TEST_CASE("psi and omega") {
  CorpusEntry swap = entry("swap-2loop");
  VerifiedIso iso = VerifiedIso::verify(swap.spec, 3);
  const GraphPtr& g = swap.spec.source;
  WeylClass c = WeylClass::make(parse_element(g, Ring::Integer, "1*[a|b]"), parse_lasso(*g, "b(a)^inf"));
  WeylClass image = psi(iso, c);
  CHECK(format_element(image.representative()) == "1*[b|a]");
  CHECK(format_lasso(*g, image.base()) == "a(b)^inf");
  CHECK(format_arrow(*g, omega_via_pi(iso, parse_arrow(*g, "(a(b)^inf, 1, (b)^inf)"))) ==
        "(b(a)^inf, 1, (a)^inf)");

  // The loop inversion reverses lags.
  CorpusEntry inv = entry("inversion-loop");
  VerifiedIso flip = VerifiedIso::verify(inv.spec, 3);
  const Graph& loop = *inv.spec.source;
  CHECK(format_arrow(loop, omega_via_pi(flip, parse_arrow(loop, "((e)^inf, 2, (e)^inf)"))) ==
        "((e)^inf, -2, (e)^inf)");
}

TEST_CASE("omega agrees with the relabel of each relabel spec") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.relabel) continue;
    CAPTURE(e.name);
    VerifiedIso iso = VerifiedIso::verify(e.spec, 3);
    Sampler sampler(e.spec.source, Ring::Integer, 13);
    for (int i = 0; i < 30; ++i) {
      Arrow a = sampler.arrow(4, 2);
      Arrow expected{relabel_lasso(*e.spec.target, *e.relabel, a.range), a.lag,
                     relabel_lasso(*e.spec.target, *e.relabel, a.source)};
      REQUIRE(omega_via_pi(iso, a) == expected);
    }
  }
}

TEST_CASE("round trip through a groupoid iso") {
  for (const std::string name : {"swap-cycle2", "inversion-loop", "conjugation-2loop"}) {
    CAPTURE(name);
    CorpusEntry e = entry(name);
    VerifiedIso iso = VerifiedIso::verify(e.spec, 3);
    GroupoidIsoSpec omega = groupoid_iso_from_pi(iso, 2, 30);
    IsoSpec back = pi_from_groupoid_iso(omega, e.spec.ring);
    CHECK(validate_pi(back, 3).passed());
    // The rebuilt spec sends every cylinder indicator where the original does.
    VerifiedIso rebuilt = VerifiedIso::verify(back, 3);
    for (const Cylinder& c : cylinders_up_to(*e.spec.source, 2)) {
      Element f = Element::indicator(e.spec.source, e.spec.ring, c);
      REQUIRE(extend_pi(rebuilt, f) == extend_pi(iso, f));
    }
  }
}

TEST_CASE("a table that is not a homomorphism is refused") {
  const GraphPtr& g = graph("2loop");
  GroupoidIsoSpec spec = groupoid_iso_from_relabel(g, g, relabel_by_names(*g, *g, {}), 1);
  spec.relabel.reset();
  spec.forward[parse_cylinder(*g, "[a|v]")] = {parse_cylinder(*g, "[b|v]")};
  CHECK(error_kind([&] { pi_from_groupoid_iso(spec, Ring::Integer); }) == ErrorKind::NotAHomomorphism);
}
