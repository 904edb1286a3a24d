#include "leavitt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "leavitt/error.hpp"

namespace leavitt {

Graph::Graph(std::vector<std::string> vertex_names, std::vector<EdgeSpec> edges) {
  std::sort(vertex_names.begin(), vertex_names.end());
  if (std::adjacent_find(vertex_names.begin(), vertex_names.end()) != vertex_names.end()) {
    fail(ErrorKind::Invalid, "duplicate vertex id");
  }
  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].name == edges[i - 1].name) {
      fail(ErrorKind::Invalid, "duplicate edge id '" + edges[i].name + "'");
    }
  }
  vertex_names_ = std::move(vertex_names);
  for (VertexId v = 0; v < vertex_names_.size(); ++v) {
    if (vertex_names_[v].empty()) fail(ErrorKind::Invalid, "empty vertex id");
    vertex_index_.emplace(vertex_names_[v], v);
  }
  range_edges_.resize(vertex_names_.size());
  source_edges_.resize(vertex_names_.size());
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const EdgeSpec& spec = edges[e];
    if (spec.name.empty()) fail(ErrorKind::Invalid, "empty edge id");
    if (vertex_index_.count(spec.name) != 0) {
      fail(ErrorKind::Invalid, "id '" + spec.name + "' names both a vertex and an edge");
    }
    auto r = find_vertex(spec.range);
    auto s = find_vertex(spec.source);
    if (!r) fail(ErrorKind::Invalid, "edge '" + spec.name + "' has unknown range '" + spec.range + "'");
    if (!s) fail(ErrorKind::Invalid, "edge '" + spec.name + "' has unknown source '" + spec.source + "'");
    edge_names_.push_back(spec.name);
    edge_index_.emplace(spec.name, e);
    range_.push_back(*r);
    source_.push_back(*s);
    range_edges_[*r].push_back(e);
    source_edges_[*s].push_back(e);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

void validate_graph(const Graph& graph) {
  if (graph.vertex_count() == 0) fail(ErrorKind::Invalid, "graph has no vertices");
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (graph.range_edges(v).empty()) fail(ErrorKind::SourceVertex, graph.vertex_name(v));
  }
}

// ---------------------------------------------------------------------------
// Paths

Path Path::vertex(VertexId v) { return Path({}, v, v); }

Path Path::edge(const Graph& graph, EdgeId e) {
  return Path({e}, graph.range(e), graph.source(e));
}

Path Path::from_edges(const Graph& graph, std::vector<EdgeId> edges) {
  if (edges.empty()) fail(ErrorKind::Invalid, "a length-0 path needs its vertex");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (graph.source(edges[i]) != graph.range(edges[i + 1])) {
      fail(ErrorKind::Mismatch, "s(" + graph.edge_name(edges[i]) + ") != r(" +
                                    graph.edge_name(edges[i + 1]) + ")");
    }
  }
  VertexId r = graph.range(edges.front());
  VertexId s = graph.source(edges.back());
  return Path(std::move(edges), r, s);
}

Path concat(const Graph& graph, const Path& first, const Path& second) {
  if (first.source() != second.range()) {
    fail(ErrorKind::Mismatch, "source of first path is " + graph.vertex_name(first.source()) +
                                  ", range of second is " + graph.vertex_name(second.range()));
  }
  if (first.is_vertex()) return second;
  if (second.is_vertex()) return first;
  std::vector<EdgeId> edges = first.edges();
  edges.insert(edges.end(), second.edges().begin(), second.edges().end());
  return Path::from_edges(graph, std::move(edges));
}

Path append_edge(const Graph& graph, const Path& path, EdgeId e) {
  return concat(graph, path, Path::edge(graph, e));
}

bool is_prefix(const Path& prefix, const Path& path) {
  if (prefix.range() != path.range()) return false;
  if (prefix.length() > path.length()) return false;
  return std::equal(prefix.edges().begin(), prefix.edges().end(), path.edges().begin());
}

Path take(const Graph& graph, const Path& path, std::size_t m) {
  if (m == 0) return Path::vertex(path.range());
  if (m >= path.length()) return path;
  return Path::from_edges(graph, {path.edges().begin(), path.edges().begin() + m});
}

Path drop(const Graph& graph, const Path& path, std::size_t m) {
  if (m == 0) return path;
  if (m >= path.length()) return Path::vertex(path.source());
  return Path::from_edges(graph, {path.edges().begin() + m, path.edges().end()});
}

std::vector<Path> extensions(const Graph& graph, const Path& path, std::size_t extra) {
  std::vector<Path> layer{path};
  for (std::size_t step = 0; step < extra; ++step) {
    std::vector<Path> next;
    for (const Path& p : layer) {
      for (EdgeId e : graph.range_edges(p.source())) next.push_back(append_edge(graph, p, e));
    }
    layer = std::move(next);
  }
  return layer;
}

std::vector<Path> paths_of_length(const Graph& graph, std::size_t length) {
  std::vector<Path> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    auto ext = extensions(graph, Path::vertex(v), length);
    out.insert(out.end(), ext.begin(), ext.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> paths_up_to(const Graph& graph, std::size_t max_length) {
  std::vector<Path> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto layer = paths_of_length(graph, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lassos

namespace {

std::size_t primitive_period(const std::vector<EdgeId>& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = cycle[i] == cycle[i - d];
    if (ok) return d;
  }
  return n;
}

void check_contiguous(const Graph& graph, const std::vector<EdgeId>& edges) {
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (graph.source(edges[i]) != graph.range(edges[i + 1])) {
      fail(ErrorKind::Mismatch, "s(" + graph.edge_name(edges[i]) + ") != r(" +
                                    graph.edge_name(edges[i + 1]) + ")");
    }
  }
}

}  // namespace

Lasso Lasso::make(const Graph& graph, std::vector<EdgeId> prefix, std::vector<EdgeId> cycle) {
  if (cycle.empty()) fail(ErrorKind::Invalid, "lasso cycle is empty");
  for (EdgeId e : prefix) {
    if (e >= graph.edge_count()) fail(ErrorKind::Invalid, "edge index out of range");
  }
  for (EdgeId e : cycle) {
    if (e >= graph.edge_count()) fail(ErrorKind::Invalid, "edge index out of range");
  }
  check_contiguous(graph, prefix);
  check_contiguous(graph, cycle);
  if (graph.source(cycle.back()) != graph.range(cycle.front())) {
    fail(ErrorKind::Mismatch, "lasso cycle is not closed");
  }
  if (!prefix.empty() && graph.source(prefix.back()) != graph.range(cycle.front())) {
    fail(ErrorKind::Mismatch, "lasso prefix does not meet its cycle");
  }
  cycle.resize(primitive_period(cycle));
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
  }
  VertexId r = graph.range(prefix.empty() ? cycle.front() : prefix.front());
  return Lasso(std::move(prefix), std::move(cycle), r);
}

EdgeId Lasso::edge_at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

Path Lasso::initial(const Graph& graph, std::size_t m) const {
  if (m == 0) return Path::vertex(range_);
  return Path::from_edges(graph, unroll(*this, m));
}

bool Lasso::starts_with(const Path& path) const {
  if (path.range() != range_) return false;
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (edge_at(i) != path.edges()[i]) return false;
  }
  return true;
}

Lasso shift(const Graph& graph, const Lasso& x, std::size_t m) {
  const auto& p = x.prefix();
  const auto& c = x.cycle();
  if (m <= p.size()) {
    return Lasso::make(graph, {p.begin() + m, p.end()}, c);
  }
  std::size_t offset = (m - p.size()) % c.size();
  std::vector<EdgeId> rotated(c.begin() + offset, c.end());
  rotated.insert(rotated.end(), c.begin(), c.begin() + offset);
  return Lasso::make(graph, {}, std::move(rotated));
}

Lasso prepend(const Graph& graph, const Path& path, const Lasso& x) {
  if (path.source() != x.range()) {
    fail(ErrorKind::Mismatch, "path source " + graph.vertex_name(path.source()) +
                                  " does not meet lasso range " + graph.vertex_name(x.range()));
  }
  std::vector<EdgeId> prefix = path.edges();
  prefix.insert(prefix.end(), x.prefix().begin(), x.prefix().end());
  return Lasso::make(graph, std::move(prefix), x.cycle());
}

std::vector<EdgeId> unroll(const Lasso& x, std::size_t n) {
  std::vector<EdgeId> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(x.edge_at(i));
  return out;
}

bool lag_equivalent(const Graph& graph, const Lasso& x, Lag lag, const Lasso& y) {
  // Past both prefixes the two tails are pure cycles, and shifting both by one
  // more step preserves (in)equality, so one comparison decides.
  Lag m = std::max<Lag>({static_cast<Lag>(x.prefix().size()),
                         static_cast<Lag>(y.prefix().size()) + lag, 0});
  Lag n = m - lag;
  return shift(graph, x, static_cast<std::size_t>(m)) == shift(graph, y, static_cast<std::size_t>(n));
}

Lasso first_continuation(const Graph& graph, const Path& path) {
  std::vector<EdgeId> walk = path.edges();
  std::vector<VertexId> seen;
  VertexId v = path.source();
  std::size_t start = walk.size();
  while (true) {
    auto it = std::find(seen.begin(), seen.end(), v);
    if (it != seen.end()) {
      std::size_t at = start + static_cast<std::size_t>(it - seen.begin());
      std::vector<EdgeId> prefix(walk.begin(), walk.begin() + at);
      std::vector<EdgeId> cycle(walk.begin() + at, walk.end());
      return Lasso::make(graph, std::move(prefix), std::move(cycle));
    }
    seen.push_back(v);
    const auto& next = graph.range_edges(v);
    if (next.empty()) fail(ErrorKind::SourceVertex, graph.vertex_name(v));
    walk.push_back(next.front());
    v = graph.source(next.front());
  }
}

std::vector<Lasso> lassos_up_to(const Graph& graph, std::size_t max_size) {
  std::set<Lasso> found;
  std::vector<std::vector<Path>> by_length;
  for (std::size_t n = 0; n <= max_size; ++n) by_length.push_back(paths_of_length(graph, n));
  for (std::size_t cycle_len = 1; cycle_len <= max_size; ++cycle_len) {
    for (const Path& c : by_length[cycle_len]) {
      if (c.range() != c.source()) continue;
      for (std::size_t prefix_len = 0; prefix_len + cycle_len <= max_size; ++prefix_len) {
        for (const Path& p : by_length[prefix_len]) {
          if (p.source() != c.range()) continue;
          Lasso x = Lasso::make(graph, p.edges(), c.edges());
          if (x.description_size() <= max_size) found.insert(std::move(x));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Arrows and cylinders

Arrow make_arrow(const Graph& graph, Lasso range, Lag lag, Lasso source) {
  if (!lag_equivalent(graph, range, lag, source)) {
    fail(ErrorKind::Invalid, "paths are not shift equivalent with lag " + std::to_string(lag));
  }
  return Arrow{std::move(range), lag, std::move(source)};
}

Arrow unit_arrow(const Lasso& x) { return Arrow{x, 0, x}; }

Arrow compose(const Arrow& first, const Arrow& second) {
  if (first.source != second.range) fail(ErrorKind::NotComposable, "middle paths differ");
  return Arrow{first.range, first.lag + second.lag, second.source};
}

Arrow invert(const Arrow& arrow) { return Arrow{arrow.source, -arrow.lag, arrow.range}; }

Cylinder make_cylinder(Path range_path, Path source_path) {
  if (range_path.source() != source_path.source()) {
    fail(ErrorKind::SourceMismatch, "cylinder paths have different sources");
  }
  return Cylinder{std::move(range_path), std::move(source_path)};
}

bool contains(const Graph& graph, const Cylinder& cylinder, const Arrow& arrow) {
  if (arrow.lag != cylinder.degree()) return false;
  if (!arrow.range.starts_with(cylinder.range_path)) return false;
  if (!arrow.source.starts_with(cylinder.source_path)) return false;
  return shift(graph, arrow.range, cylinder.range_path.length()) ==
         shift(graph, arrow.source, cylinder.source_path.length());
}

Arrow arrow_at_source(const Graph& graph, const Cylinder& cylinder, const Lasso& source) {
  if (!source.starts_with(cylinder.source_path)) {
    fail(ErrorKind::OutsideDomain, "path is not in the source of the cylinder");
  }
  Lasso tail = shift(graph, source, cylinder.source_path.length());
  return Arrow{prepend(graph, cylinder.range_path, tail), cylinder.degree(), source};
}

bool is_singleton_cylinder(const Graph& graph, const Path& path) {
  std::vector<bool> seen(graph.vertex_count(), false);
  VertexId v = path.source();
  while (!seen[v]) {
    seen[v] = true;
    const auto& next = graph.range_edges(v);
    if (next.size() != 1) return false;
    v = graph.source(next.front());
  }
  return true;
}

bool cycle_has_entry(const Graph& graph, const Path& cycle) {
  if (cycle.is_vertex() || cycle.range() != cycle.source()) {
    fail(ErrorKind::NotACycle, "path is not closed");
  }
  std::vector<VertexId> ranges;
  for (EdgeId e : cycle.edges()) ranges.push_back(graph.range(e));
  std::vector<VertexId> sorted = ranges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::NotACycle, "cycle revisits a vertex");
  }
  for (EdgeId e : cycle.edges()) {
    if (graph.range_edges(graph.range(e)).size() > 1) return true;
  }
  return false;
}

std::optional<std::size_t> isolation_depth(const Graph& graph, const Lasso& x) {
  for (std::size_t k = 0; k <= x.description_size(); ++k) {
    if (is_singleton_cylinder(graph, x.initial(graph, k))) return k;
  }
  return std::nullopt;
}

}  // namespace leavitt
