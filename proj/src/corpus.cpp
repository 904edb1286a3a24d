#include "leavitt/corpus.hpp"

#include <cctype>
#include <map>

#include "leavitt/error.hpp"
#include "leavitt/text.hpp"

namespace leavitt {

namespace {

constexpr std::string_view kLoop =
    "vertex v\n"
    "edge e range=v source=v\n";

constexpr std::string_view kTwoLoops =
    "vertex v\n"
    "edge a range=v source=v\n"
    "edge b range=v source=v\n";

constexpr std::string_view kCycle2 =
    "vertex u\n"
    "vertex v\n"
    "edge e range=u source=v\n"
    "edge f range=v source=u\n";

constexpr std::string_view kCycle2Entry =
    "vertex u\n"
    "vertex v\n"
    "vertex w\n"
    "edge e range=v source=u\n"
    "edge f range=u source=v\n"
    "edge g range=u source=w\n"
    "edge h range=w source=w\n";

}  // namespace

std::string_view reference_graph_text(std::string_view name) {
  if (name == "loop") return kLoop;
  if (name == "2loop") return kTwoLoops;
  if (name == "cycle2") return kCycle2;
  if (name == "cycle2e") return kCycle2Entry;
  fail(ErrorKind::Invalid, "unknown reference graph '" + std::string(name) + "'");
}

GraphPtr reference_graph(std::string_view name) { return parse_graph(reference_graph_text(name)); }

const std::vector<std::string>& reference_graph_names() {
  static const std::vector<std::string> names{"loop", "2loop", "cycle2", "cycle2e"};
  return names;
}

namespace {

GeneratorImages relabel_images(const GraphPtr& source, const GraphPtr& target,
                               const GraphRelabel& relabel, Ring ring) {
  GeneratorImages out;
  for (VertexId v = 0; v < source->vertex_count(); ++v) {
    out.vertex.emplace(v, Element::vertex_unit(target, ring, relabel.vertex[v]));
  }
  for (EdgeId e = 0; e < source->edge_count(); ++e) {
    Path image = Path::edge(*target, relabel.edge[e]);
    out.edge.emplace(e, Element::path_generator(target, ring, image));
    out.ghost.emplace(e, Element::ghost_generator(target, ring, image));
  }
  return out;
}

GraphRelabel identity_relabel(const Graph& graph) {
  GraphRelabel out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out.vertex.push_back(v);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) out.edge.push_back(e);
  return out;
}

VertexId only_vertex(const Graph& graph) {
  if (graph.vertex_count() != 1) fail(ErrorKind::Invalid, "expected a one-vertex graph");
  return 0;
}

std::string upper(const std::string& name) {
  std::string out = name;
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

IsoSpec identity_spec(const GraphPtr& graph, Ring ring) {
  return relabel_spec(graph, graph, identity_relabel(*graph), ring);
}

IsoSpec relabel_spec(const GraphPtr& source, const GraphPtr& target, const GraphRelabel& relabel,
                     Ring ring) {
  validate_relabel(*source, *target, relabel);
  IsoSpec spec;
  spec.source = source;
  spec.target = target;
  spec.ring = ring;
  spec.forward = relabel_images(source, target, relabel, ring);
  spec.backward = relabel_images(target, source, inverse_relabel(relabel), ring);
  return spec;
}

IsoSpec conjugation_spec(const GraphPtr& graph) {
  IsoSpec spec = identity_spec(graph, Ring::Gaussian);
  spec.twist = Twist::Conjugation;
  return spec;
}

IsoSpec loop_inversion_spec(const GraphPtr& loop_graph, Ring ring) {
  only_vertex(*loop_graph);
  if (loop_graph->edge_count() != 1) fail(ErrorKind::Invalid, "expected a single loop");
  IsoSpec spec = identity_spec(loop_graph, ring);
  Path e = Path::edge(*loop_graph, 0);
  for (GeneratorImages* images : {&spec.forward, &spec.backward}) {
    images->edge.insert_or_assign(0, Element::ghost_generator(loop_graph, ring, e));
    images->ghost.insert_or_assign(0, Element::path_generator(loop_graph, ring, e));
  }
  return spec;
}

IsoSpec duplicate_image_spec(const GraphPtr& two_loops, Ring ring) {
  only_vertex(*two_loops);
  IsoSpec spec = identity_spec(two_loops, ring);
  Path a = Path::edge(*two_loops, *two_loops->find_edge("a"));
  EdgeId b = *two_loops->find_edge("b");
  spec.forward.edge.insert_or_assign(b, Element::path_generator(two_loops, ring, a));
  spec.forward.ghost.insert_or_assign(b, Element::ghost_generator(two_loops, ring, a));
  return spec;
}

IsoSpec non_diagonal_spec(const GraphPtr& two_loops, Ring ring) {
  only_vertex(*two_loops);
  IsoSpec spec = identity_spec(two_loops, ring);
  EdgeId a = *two_loops->find_edge("a");
  Path pa = Path::edge(*two_loops, a);
  Path pb = Path::edge(*two_loops, *two_loops->find_edge("b"));
  Element image = Element::path_generator(two_loops, ring, pa) +
                  Element::path_generator(two_loops, ring, pb);
  spec.forward.edge.insert_or_assign(a, image);
  spec.forward.ghost.insert_or_assign(a, star(image));
  return spec;
}

GraphPtr renamed_copy(const Graph& graph) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) vertices.push_back(upper(graph.vertex_name(v)));
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    edges.push_back(EdgeSpec{upper(graph.edge_name(e)), upper(graph.vertex_name(graph.range(e))),
                             upper(graph.vertex_name(graph.source(e)))});
  }
  auto copy = std::make_shared<const Graph>(std::move(vertices), std::move(edges));
  validate_graph(*copy);
  return copy;
}

GraphRelabel renaming_relabel(const Graph& graph, const Graph& copy) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    pairs.emplace_back(graph.vertex_name(v), upper(graph.vertex_name(v)));
  }
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    pairs.emplace_back(graph.edge_name(e), upper(graph.edge_name(e)));
  }
  return relabel_by_names(graph, copy, pairs);
}

GraphRelabel relabel_by_names(const Graph& source, const Graph& target,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto lookup = [&](const std::string& name) -> std::string {
    for (const auto& [from, to] : pairs) {
      if (from == name) return to;
    }
    return name;
  };
  GraphRelabel out;
  for (VertexId v = 0; v < source.vertex_count(); ++v) {
    auto w = target.find_vertex(lookup(source.vertex_name(v)));
    if (!w) fail(ErrorKind::Invalid, "relabel target misses vertex " + lookup(source.vertex_name(v)));
    out.vertex.push_back(*w);
  }
  for (EdgeId e = 0; e < source.edge_count(); ++e) {
    auto f = target.find_edge(lookup(source.edge_name(e)));
    if (!f) fail(ErrorKind::Invalid, "relabel target misses edge " + lookup(source.edge_name(e)));
    out.edge.push_back(*f);
  }
  validate_relabel(source, target, out);
  return out;
}

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  std::map<std::string, GraphPtr> graphs;
  for (const std::string& name : reference_graph_names()) graphs[name] = reference_graph(name);

  for (const std::string& name : reference_graph_names()) {
    const GraphPtr& g = graphs[name];
    out.push_back({"identity-" + name, identity_spec(g, Ring::Integer), std::nullopt, identity_relabel(*g)});
  }
  {
    const GraphPtr& g = graphs["2loop"];
    GraphRelabel swap = relabel_by_names(*g, *g, {{"a", "b"}, {"b", "a"}});
    out.push_back({"swap-2loop", relabel_spec(g, g, swap, Ring::Integer), std::nullopt, swap});
  }
  {
    const GraphPtr& g = graphs["cycle2"];
    GraphRelabel swap = relabel_by_names(*g, *g, {{"u", "v"}, {"v", "u"}, {"e", "f"}, {"f", "e"}});
    out.push_back({"swap-cycle2", relabel_spec(g, g, swap, Ring::Integer), std::nullopt, swap});
  }
  for (const std::string name : {"loop", "cycle2e"}) {
    const GraphPtr& g = graphs[name];
    GraphPtr copy = renamed_copy(*g);
    GraphRelabel rename = renaming_relabel(*g, *copy);
    out.push_back({"rename-" + name, relabel_spec(g, copy, rename, Ring::Integer), std::nullopt, rename});
  }
  out.push_back({"conjugation-2loop", conjugation_spec(graphs["2loop"]), std::nullopt, std::nullopt});
  out.push_back({"inversion-loop", loop_inversion_spec(graphs["loop"], Ring::Integer), std::nullopt,
                 std::nullopt});
  out.push_back({"duplicate-2loop", duplicate_image_spec(graphs["2loop"], Ring::Integer), CheckKind::L3,
                 std::nullopt});
  out.push_back({"nondiagonal-2loop", non_diagonal_spec(graphs["2loop"], Ring::Integer),
                 CheckKind::Diagonal, std::nullopt});
  return out;
}

}  // namespace leavitt
