#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace leavitt {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Lag = std::int64_t;

struct EdgeSpec {
  std::string name;
  std::string range;
  std::string source;
};

//! A finite directed graph (E^0, E^1, r, s).
//!
//! Vertex and edge indices follow the lexicographic order of their names, so
//! comparing index sequences is comparing name sequences.
class Graph {
 public:
  //! Throws Invalid on duplicate names, names shared between a vertex and an
  //! edge, or edges naming unknown vertices. Sources are not rejected here,
  //! see validate_graph.
  Graph(std::vector<std::string> vertex_names, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edge_names_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  VertexId range(EdgeId e) const { return range_.at(e); }
  VertexId source(EdgeId e) const { return source_.at(e); }

  //! r^{-1}(v), in index order. These are the edges that can follow a path
  //! whose source is v.
  const std::vector<EdgeId>& range_edges(VertexId v) const { return range_edges_.at(v); }
  //! s^{-1}(v), in index order.
  const std::vector<EdgeId>& source_edges(VertexId v) const { return source_edges_.at(v); }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<VertexId> range_;
  std::vector<VertexId> source_;
  std::vector<std::vector<EdgeId>> range_edges_;
  std::vector<std::vector<EdgeId>> source_edges_;
};

using GraphPtr = std::shared_ptr<const Graph>;

//! Throws SourceVertex naming the first vertex that receives no edge.
void validate_graph(const Graph& graph);

//! A finite path mu_1 ... mu_n with s(mu_i) = r(mu_{i+1}). Length-0 paths
//! carry their vertex as both range and source.
class Path {
 public:
  static Path vertex(VertexId v);
  static Path edge(const Graph& graph, EdgeId e);
  //! Throws Mismatch if consecutive edges do not meet, Invalid if empty.
  static Path from_edges(const Graph& graph, std::vector<EdgeId> edges);

  VertexId range() const noexcept { return range_; }
  VertexId source() const noexcept { return source_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool is_vertex() const noexcept { return edges_.empty(); }
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path&, const Path&) = default;

 private:
  Path(std::vector<EdgeId> edges, VertexId range, VertexId source)
      : edges_(std::move(edges)), range_(range), source_(source) {}

  std::vector<EdgeId> edges_;
  VertexId range_ = 0;
  VertexId source_ = 0;
};

//! Throws Mismatch if s(first) != r(second).
Path concat(const Graph& graph, const Path& first, const Path& second);
Path append_edge(const Graph& graph, const Path& path, EdgeId e);
//! True if `path` starts with `prefix` (vertex prefixes match on the range).
bool is_prefix(const Path& prefix, const Path& path);
//! path(0, m).
Path take(const Graph& graph, const Path& path, std::size_t m);
//! sigma^m(path); drops everything when m >= length, leaving s(path).
Path drop(const Graph& graph, const Path& path, std::size_t m);

//! All path.tau with |tau| = extra.
std::vector<Path> extensions(const Graph& graph, const Path& path, std::size_t extra);
std::vector<Path> paths_of_length(const Graph& graph, std::size_t length);
std::vector<Path> paths_up_to(const Graph& graph, std::size_t max_length);

//! An eventually periodic infinite path prefix.cycle.cycle...
//!
//! Always canonical: the cycle is primitive and the prefix is as short as
//! possible, so equality is structural.
class Lasso {
 public:
  //! Throws Mismatch if the edges do not form a path with a closed cycle,
  //! Invalid if the cycle is empty.
  static Lasso make(const Graph& graph, std::vector<EdgeId> prefix, std::vector<EdgeId> cycle);

  const std::vector<EdgeId>& prefix() const noexcept { return prefix_; }
  const std::vector<EdgeId>& cycle() const noexcept { return cycle_; }
  VertexId range() const noexcept { return range_; }
  std::size_t description_size() const noexcept { return prefix_.size() + cycle_.size(); }

  EdgeId edge_at(std::size_t i) const;
  //! x(0, m).
  Path initial(const Graph& graph, std::size_t m) const;
  bool starts_with(const Path& path) const;

  friend bool operator==(const Lasso&, const Lasso&) = default;
  friend std::strong_ordering operator<=>(const Lasso&, const Lasso&) = default;

 private:
  Lasso(std::vector<EdgeId> prefix, std::vector<EdgeId> cycle, VertexId range)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)), range_(range) {}

  std::vector<EdgeId> prefix_;
  std::vector<EdgeId> cycle_;
  VertexId range_ = 0;
};

Lasso shift(const Graph& graph, const Lasso& x, std::size_t m);
//! path.x; throws Mismatch if s(path) != r(x).
Lasso prepend(const Graph& graph, const Path& path, const Lasso& x);
//! First n edges of the unrolled path.
std::vector<EdgeId> unroll(const Lasso& x, std::size_t n);
//! Exists m, n >= 0 with m - n = lag and shift(x, m) = shift(y, n).
bool lag_equivalent(const Graph& graph, const Lasso& x, Lag lag, const Lasso& y);

//! A lasso obtained by following the first available edge from s(path)
//! until a vertex repeats.
Lasso first_continuation(const Graph& graph, const Path& path);

//! Every canonical lasso with |prefix| + |cycle| <= max_size, sorted.
std::vector<Lasso> lassos_up_to(const Graph& graph, std::size_t max_size);

//! An element (range, lag, source) of the graph groupoid.
struct Arrow {
  Lasso range;
  Lag lag = 0;
  Lasso source;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend std::strong_ordering operator<=>(const Arrow&, const Arrow&) = default;
};

//! Throws Invalid unless range and source are shift equivalent with the lag.
Arrow make_arrow(const Graph& graph, Lasso range, Lag lag, Lasso source);
Arrow unit_arrow(const Lasso& x);
//! Throws NotComposable unless first.source == second.range.
Arrow compose(const Arrow& first, const Arrow& second);
Arrow invert(const Arrow& arrow);
inline bool is_isotropy(const Arrow& arrow) { return arrow.range == arrow.source; }

//! The compact open bisection Z(range_path, source_path).
struct Cylinder {
  Path range_path;
  Path source_path;

  Lag degree() const {
    return static_cast<Lag>(range_path.length()) - static_cast<Lag>(source_path.length());
  }

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  //! Orders by source path first, then range path.
  friend std::strong_ordering operator<=>(const Cylinder& a, const Cylinder& b) {
    if (auto c = a.source_path <=> b.source_path; c != 0) return c;
    return a.range_path <=> b.range_path;
  }
};

//! Throws SourceMismatch unless both paths have the same source.
Cylinder make_cylinder(Path range_path, Path source_path);
inline Cylinder unit_cylinder(const Path& path) { return Cylinder{path, path}; }
bool contains(const Graph& graph, const Cylinder& cylinder, const Arrow& arrow);
//! The unique arrow of the cylinder whose source is `source`.
Arrow arrow_at_source(const Graph& graph, const Cylinder& cylinder, const Lasso& source);

//! True iff s(path)E^infinity has exactly one element.
bool is_singleton_cylinder(const Graph& graph, const Path& path);
//! Throws NotACycle unless the path is closed with distinct vertices r(eta_i).
bool cycle_has_entry(const Graph& graph, const Path& cycle);
//! Least k with Z(x(0,k)) = {x}, if any.
std::optional<std::size_t> isolation_depth(const Graph& graph, const Lasso& x);

}  // namespace leavitt
