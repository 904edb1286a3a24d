#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/stone.hpp"
#include "leavitt/weyl.hpp"

namespace leavitt {

//! The Weyl groupoid map of a verified iso: [(n,x)] -> [(pi(n), kappa(x))].
WeylClass psi(const VerifiedIso& iso, const WeylClass& c);

//! The groupoid isomorphism of the graph groupoids obtained by passing an
//! arrow through phi, psi and phi^-1.
Arrow omega_via_pi(const VerifiedIso& iso, const Arrow& arrow);

//! A graph isomorphism: index maps for vertices and edges.
struct GraphRelabel {
  std::vector<VertexId> vertex;
  std::vector<EdgeId> edge;
};

//! Throws Invalid unless the maps form a graph isomorphism.
void validate_relabel(const Graph& source, const Graph& target, const GraphRelabel& relabel);
GraphRelabel inverse_relabel(const GraphRelabel& relabel);
Path relabel_path(const Graph& target, const GraphRelabel& relabel, const Path& path);
Lasso relabel_lasso(const Graph& target, const GraphRelabel& relabel, const Lasso& x);

using CylinderTable = std::map<Cylinder, std::vector<Cylinder>>;
using ArrowMap = std::function<Arrow(const Arrow&)>;

//! A topological groupoid isomorphism between graph groupoids, described by
//! the images of the cylinders Z(mu,nu) with |mu|, |nu| <= depth. Each image
//! is a disjoint union of cylinders of the target. A relabel or a pair of
//! evaluators, when present, gives the same map on arbitrary lasso arrows.
struct GroupoidIsoSpec {
  GraphPtr source;
  GraphPtr target;
  std::size_t depth = 0;
  CylinderTable forward;
  CylinderTable backward;
  std::optional<GraphRelabel> relabel;
  ArrowMap evaluator;
  ArrowMap inverse_evaluator;
};

//! Every Z(mu,nu) over the graph with |mu|, |nu| <= depth.
std::vector<Cylinder> cylinders_up_to(const Graph& graph, std::size_t depth);

GroupoidIsoSpec groupoid_iso_from_relabel(GraphPtr source, GraphPtr target, GraphRelabel relabel,
                                          std::size_t depth);

//! Evaluates the groupoid isomorphism at an arrow. Evaluators take
//! precedence, then a relabel. From the table alone the unit map comes from
//! the fixed point of the image of Z(prefix.cycle, prefix) and the arrow is
//! found in the image of its minimal cylinder; throws Invalid when the table
//! is too shallow for the arrow.
Arrow evaluate_groupoid_iso(const GroupoidIsoSpec& spec, const Arrow& arrow);
Arrow evaluate_groupoid_iso_inverse(const GroupoidIsoSpec& spec, const Arrow& arrow);

struct HomomorphismReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

//! On seeded random composable pairs and single arrows: map(gh) =
//! map(g) map(h), map(g^-1) = map(g)^-1, and back(map(g)) = g.
HomomorphismReport check_groupoid_iso(const GraphPtr& graph, const ArrowMap& map, const ArrowMap& back,
                                      std::size_t samples, std::uint64_t seed);

//! Longest path a table evaluation of the arrow needs.
std::size_t table_reach(const Graph& graph, const Arrow& arrow);

//! The groupoid iso induced by a verified iso. The table sends each cylinder
//! to the support of pi(1_{Z(mu,nu)}); the evaluators are omega_via_pi for
//! the iso and its inverse. The evaluator is checked on `samples` seeded
//! arrows and composable pairs, and against the table where the table
//! reaches; throws NotAHomomorphism on a failure.
GroupoidIsoSpec groupoid_iso_from_pi(const VerifiedIso& iso, std::size_t depth,
                                     std::size_t samples = 100, std::uint64_t seed = 11);

//! The ring isomorphism f -> f o Omega^-1 on generators. The table is first
//! checked at cylinder level: images of composable cylinders compose, images
//! of inverse cylinders are inverse, and the backward table undoes the
//! forward one. Throws NotAHomomorphism naming the first failure.
IsoSpec pi_from_groupoid_iso(const GroupoidIsoSpec& spec, Ring ring);

//! Sum of the indicators of a cylinder list.
Element indicator_sum(const GraphPtr& graph, Ring ring, const std::vector<Cylinder>& cylinders);

}  // namespace leavitt
