#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/harness.hpp"

namespace leavitt {

//! Graph file text for the reference graphs "loop", "2loop", "cycle2" and
//! "cycle2e":
//!   loop     one vertex v with a loop e
//!   2loop    one vertex v with loops a, b
//!   cycle2   e: v -> u, f: u -> v
//!   cycle2e  e: u -> v, f: v -> u, g: w -> u, h: w -> w
//! (arrows point from source to range).
std::string_view reference_graph_text(std::string_view name);
GraphPtr reference_graph(std::string_view name);
const std::vector<std::string>& reference_graph_names();

//! Generators go to generators.
IsoSpec identity_spec(const GraphPtr& graph, Ring ring);
//! The IsoSpec induced by a graph isomorphism.
IsoSpec relabel_spec(const GraphPtr& source, const GraphPtr& target, const GraphRelabel& relabel,
                     Ring ring);
//! The identity on generators with complex conjugation on coefficients.
IsoSpec conjugation_spec(const GraphPtr& graph);
//! On a one-vertex one-loop graph: s_e -> s_e^*, s_e^* -> s_e.
IsoSpec loop_inversion_spec(const GraphPtr& loop_graph, Ring ring);
//! On two loops a, b at v: both s_a and s_b go to 1_{Z(a,v)}. Breaks L3.
IsoSpec duplicate_image_spec(const GraphPtr& two_loops, Ring ring);
//! On two loops a, b at v: s_a -> 1_{Z(a,v)} + 1_{Z(b,v)}, s_b -> 1_{Z(b,v)},
//! ghosts their adjoints. pi(1_{Z(a)}) is not diagonal.
IsoSpec non_diagonal_spec(const GraphPtr& two_loops, Ring ring);

//! A copy of a graph with every id upper-cased.
GraphPtr renamed_copy(const Graph& graph);
//! The relabel sending each id to its upper-cased copy.
GraphRelabel renaming_relabel(const Graph& graph, const Graph& copy);
//! Relabel given by name pairs; ids not mentioned map to themselves.
GraphRelabel relabel_by_names(const Graph& source, const Graph& target,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

struct CorpusEntry {
  std::string name;
  IsoSpec spec;
  //! Set for negative controls: the check whose failure rejects them.
  std::optional<CheckKind> rejected_by;
  //! Set for specs built from a graph isomorphism.
  std::optional<GraphRelabel> relabel;
};

//! Every corpus spec: identities on the reference graphs, relabelings, the
//! conjugation-twisted identity over Z[i], the loop inversion, and the two
//! negative controls.
std::vector<CorpusEntry> corpus();

}  // namespace leavitt
