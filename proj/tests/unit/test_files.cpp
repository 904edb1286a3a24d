#include <fstream>
#include <sstream>

#include "leavitt/files.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::string kData = LEAVITT_DATA_DIR;

std::string slurp(const std::string& file) {
  std::ifstream in(file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GraphPtr reference_loader(const std::string& name) {
  if (name == "g2loop.txt") return graph("2loop");
  if (name == "gloop.txt") return graph("loop");
  fail(ErrorKind::Parse, "no graph " + name);
}

std::string parse_message(const std::string& text) {
  try {
    parse_iso_spec(text, reference_loader);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("graph files match the reference graphs") {
  CHECK(format_graph(*load_graph(kData + "/gloop.txt")) == format_graph(*graph("loop")));
  CHECK(format_graph(*load_graph(kData + "/g2loop.txt")) == format_graph(*graph("2loop")));
  CHECK(format_graph(*load_graph(kData + "/gcycle2.txt")) == format_graph(*graph("cycle2")));
  CHECK(format_graph(*load_graph(kData + "/gcycle2e.txt")) == format_graph(*graph("cycle2e")));
  CHECK(format_graph(*load_graph(kData + "/gcycle2e_upper.txt")) == format_graph(*renamed_copy(*graph("cycle2e"))));
  CHECK(error_kind([] { load_graph(kData + "/missing.txt"); }) == ErrorKind::Parse);
}

TEST_CASE("corpus files hold the corpus specs") {
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.name);
    std::string file = kData + "/" + e.name + ".iso";
    auto [source, target] = graph_file_names(file);
    IsoSpec loaded = load_iso_spec(file);
    CHECK(format_iso_spec(loaded, source, target) == format_iso_spec(e.spec, source, target));
    CHECK(format_iso_spec(loaded, source, target) == slurp(file));
    CHECK(validate_pi(loaded, 3).passed() == !e.rejected_by.has_value());
  }
}

TEST_CASE("a spec naming one graph twice shares it") {
  IsoSpec spec = load_iso_spec(kData + "/swap-2loop.iso");
  CHECK(spec.source == spec.target);
  IsoSpec renamed = load_iso_spec(kData + "/rename-loop.iso");
  CHECK(renamed.source != renamed.target);
}

TEST_CASE("iso spec parse errors carry the line") {
  const std::string head = "[source]\ng2loop.txt\n[target]\ng2loop.txt\n";
  std::string missing_eq = parse_message(head + "[images]\np v 1*[v|v]\n");
  CHECK(missing_eq.find("line 6") != std::string::npos);
  std::string bad_element = parse_message(head + "[images]\np v = 1*[v|q]\n");
  CHECK(bad_element.find("line 6") != std::string::npos);
  std::string bad_section = parse_message(head + "[imagez]\n");
  CHECK(bad_section.find("line 5") != std::string::npos);
  std::string bad_ring = parse_message(head + "[twist]\nring = sideways\n");
  CHECK(bad_ring.find("line 6") != std::string::npos);
  std::string no_target = parse_message("[source]\ng2loop.txt\n");
  CHECK(no_target.find("target") != std::string::npos);
}

TEST_CASE("comments and blank lines are skipped") {
  IsoSpec spec = parse_iso_spec(
      "# a comment\n[source]\ngloop.txt\n\n[target]\ngloop.txt\n[images]\n"
      "p v = 1*[v|v]  # trailing\ns e = 1*[e|v]\nt e = 1*[v|e]\n"
      "[inverse]\np v = 1*[v|v]\ns e = 1*[e|v]\nt e = 1*[v|e]\n",
      reference_loader);
  CHECK(validate_pi(spec, 3).passed());
}

TEST_CASE("groupoid iso files") {
  GroupoidIsoSpec rename = load_groupoid_iso(kData + "/rename-cycle2e.omega", 2);
  REQUIRE(rename.relabel.has_value());
  CHECK(rename.depth == 2);
  const Graph& source = *rename.source;
  const Graph& target = *rename.target;
  CHECK(format_arrow(target, evaluate_groupoid_iso(rename, parse_arrow(source, "(e.g(h)^inf, 2, (h)^inf)"))) ==
        "(E.G(H)^inf, 2, (H)^inf)");

  GroupoidIsoSpec swap = load_groupoid_iso(kData + "/swap-2loop.omega", 5);
  CHECK_FALSE(swap.relabel.has_value());
  CHECK(swap.depth == 2);
  CHECK(swap.forward.size() == 49);
  std::string text = format_groupoid_iso(swap, "g2loop.txt", "g2loop.txt");
  CHECK(text == slurp(kData + "/swap-2loop.omega"));
  CHECK(pi_from_groupoid_iso(swap, Ring::Integer).forward.edge.size() == 2);
}

TEST_CASE("groupoid iso parse errors") {
  auto load = [](const std::string& text) { return parse_groupoid_iso(text, reference_loader, 2); };
  const std::string head = "[source]\ng2loop.txt\n[target]\ng2loop.txt\n";
  CHECK(error_kind([&] { load(head + "[relabel]\na => b\n"); }) == ErrorKind::Parse);
  CHECK(error_kind([&] { load(head + "[table]\n[a|v] -> [q|v]\n"); }) == ErrorKind::Parse);
  // A relabel that is not a graph isomorphism.
  CHECK(error_kind([&] { load(head + "[relabel]\nv -> v\na -> a\nb -> a\n"); }) == ErrorKind::Invalid);
}
