#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/iso.hpp"

namespace leavitt {

//! A compact open subset of the path space, held as a finite union of
//! cylinders Z(p) in canonical form: pairwise incomparable prefixes, with
//! every complete set of siblings merged into its parent.
class CompactOpen {
 public:
  //! Any finite family of prefixes; overlaps are allowed.
  static CompactOpen make(GraphPtr graph, const std::vector<Path>& prefixes);
  static CompactOpen empty(GraphPtr graph) { return make(std::move(graph), {}); }
  //! The whole path space: the union of Z(v) over all vertices.
  static CompactOpen whole(GraphPtr graph);

  const Graph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const std::vector<Path>& prefixes() const noexcept { return prefixes_; }
  bool is_empty() const noexcept { return prefixes_.empty(); }
  bool contains(const Lasso& x) const;
  //! Length of the longest prefix.
  std::size_t depth() const;
  //! Every path of the given length (at least depth()) whose cylinder lies in
  //! the set.
  std::vector<Path> expanded(std::size_t length) const;

  friend bool operator==(const CompactOpen& a, const CompactOpen& b) {
    return a.graph_ == b.graph_ && a.prefixes_ == b.prefixes_;
  }

 private:
  CompactOpen(GraphPtr graph, std::vector<Path> prefixes)
      : graph_(std::move(graph)), prefixes_(std::move(prefixes)) {}

  GraphPtr graph_;
  std::vector<Path> prefixes_;
};

CompactOpen meet(const CompactOpen& a, const CompactOpen& b);
CompactOpen join(const CompactOpen& a, const CompactOpen& b);
//! a \ b.
CompactOpen difference(const CompactOpen& a, const CompactOpen& b);
bool leq(const CompactOpen& a, const CompactOpen& b);

//! `{p1, p2}`; `{}` for the empty set.
std::string format_compact_open(const CompactOpen& set);
CompactOpen parse_compact_open(const GraphPtr& graph, std::string_view text);

//! The support of an idempotent of the diagonal. Throws NotIdempotent unless
//! d is a self-adjoint diagonal idempotent.
CompactOpen idempotent_to_set(const Element& d);
CompactOpen support_set(const Element& d);
Element set_to_idempotent(const CompactOpen& set, Ring ring);

//! The ultrafilter of compact opens containing a point, described by its
//! decreasing basis Z(x(0,m)).
class FilterChain {
 public:
  explicit FilterChain(GraphPtr graph, Lasso point)
      : graph_(std::move(graph)), point_(std::move(point)) {}

  CompactOpen basis(std::size_t m) const;
  bool contains(const CompactOpen& set) const { return set.contains(point_); }
  const Lasso& point() const noexcept { return point_; }

 private:
  GraphPtr graph_;
  Lasso point_;
};

//! The point a filter chain converges to.
inline Lasso rho_inverse(const FilterChain& chain) { return chain.point(); }

//! Default search bound for induce_kappa:
//! 4 (|E^0| + |E^1| + |prefix| + |cycle|).
std::size_t kappa_cap(const Graph& graph, const Lasso& x);

//! The homeomorphism of path spaces induced by a verified iso, at x.
//!
//! The cylinder indicator n = 1_{Z(prefix.cycle, prefix)} acts with x as its
//! only fixed point, so the image point is a fixed point of the action of
//! pi(n). The candidates are narrowed with the supports of pi(1_{Z(x(0,m))})
//! for m = 1..cap; throws NoStabilization if they never settle on one point.
Lasso induce_kappa(const VerifiedIso& iso, const Lasso& x, std::optional<std::size_t> cap = {});

struct LinearityCheck {
  bool holds = true;
  std::string witness;
};

//! Tests d(kappa^{-1}(y)) = pi(d)(y), written as pi(d)(kappa(x)) = d(x), on
//! vertex idempotents scaled by a unit, plus seeded random diagonal elements
//! with cylinders up to `depth`, at every lasso of size up to `depth`.
LinearityCheck check_kappa_linearity(const VerifiedIso& iso, std::size_t depth,
                                     std::uint64_t seed = 7);

}  // namespace leavitt
