#pragma once

#include <optional>
#include <vector>

#include "leavitt/element.hpp"

namespace leavitt {

//! Depth at which is_normalizer inspects conjugated cylinder idempotents:
//! the common source length plus twice the longest range path.
std::size_t normalizer_check_depth(const Element& n);
//! True if n 1_{Z(tau)} n* and n* 1_{Z(tau)} n are diagonal for every tau of
//! the given length.
bool conjugates_diagonal_at(const Element& n, std::size_t depth);
//! Checks conjugation at normalizer_check_depth(n) and one level deeper.
bool is_normalizer(const Element& n);

//! supp(n* n) and supp(n n*) as prefix sets; throw NotANormalizer.
std::vector<Path> dom(const Element& n);
std::vector<Path> ran(const Element& n);

//! True if every path through `path` starts with one of `prefixes`.
bool cylinder_covered(const Graph& graph, const Path& path, const std::vector<Path>& prefixes);
//! True if x starts with one of `prefixes`.
bool in_union(const Lasso& x, const std::vector<Path>& prefixes);

//! x -> to . sigma^{|from|}(x) on Z(from).
struct RewriteRule {
  Path from;
  Path to;

  Lag lag() const {
    return static_cast<Lag>(to.length()) - static_cast<Lag>(from.length());
  }
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

//! The unique point of Z(from) the rule sends to itself, when there is one.
//! A lag-0 rule with from == to fixes its whole cylinder and yields nothing.
std::optional<Lasso> fixed_point(const Graph& graph, const RewriteRule& rule);

//! A partial homeomorphism of the path space given by prefix rewriting on
//! pairwise disjoint cylinders.
class PartialMap {
 public:
  PartialMap(GraphPtr graph, std::vector<RewriteRule> rules);

  const Graph& graph() const noexcept { return *graph_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

  const RewriteRule* rule_for(const Lasso& x) const;
  bool in_domain(const Lasso& x) const { return rule_for(x) != nullptr; }
  //! Throws OutsideDomain.
  Lasso apply(const Lasso& x) const;
  //! Every rule reversed.
  PartialMap inverse() const;

 private:
  GraphPtr graph_;
  std::vector<RewriteRule> rules_;
};

//! The partial action of a normalizer. Throws NotANormalizer, or
//! InconsistentAction if two terms over one source path disagree.
PartialMap alpha(const Element& n);
//! alpha without the normalizer test, for callers that already know.
PartialMap rewrite_rules(const Element& n);
Lasso apply_alpha(const PartialMap& map, const Lasso& x);

//! The function d o map, supported on the domain of the map.
Element pull_back(const Element& d, const PartialMap& map);

//! A path x together with a depth k at which Z(x(0,k)) = {x}.
class IsolatedPoint {
 public:
  static std::optional<IsolatedPoint> of(const Graph& graph, const Lasso& x);
  //! Throws Invalid when x is not isolated.
  static IsolatedPoint make(const Graph& graph, const Lasso& x);

  const Lasso& point() const noexcept { return point_; }
  std::size_t depth() const noexcept { return depth_; }
  //! p_x = 1_{Z(x(0,k))}.
  Element projection(GraphPtr graph, Ring ring) const;

 private:
  IsolatedPoint(Lasso point, std::size_t depth) : point_(std::move(point)), depth_(depth) {}
  Lasso point_;
  std::size_t depth_;
};

struct Compression {
  Scalar coefficient;
  Lag degree = 0;
};

//! p_x n p_x = r 1_{(x,k,x)}; nothing when the product vanishes. Throws
//! MalformedCompression if the product is not a single isotropy arrow at x.
std::optional<Compression> compress(const IsolatedPoint& x, const Element& n);
//! The r with p_x a p_x = r p_x; throws NotZeroGraded.
Scalar compress_scalar(const IsolatedPoint& x, const Element& a);

}  // namespace leavitt
