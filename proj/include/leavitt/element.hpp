#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/scalar.hpp"

namespace leavitt {

//! Either homogeneous of a fixed degree or mixed. The zero element reports
//! homogeneous of degree 0.
class Degree {
 public:
  static Degree homogeneous(Lag k) { return Degree(false, k); }
  static Degree mixed() { return Degree(true, 0); }

  bool is_homogeneous() const noexcept { return !mixed_; }
  //! Only meaningful when homogeneous.
  Lag value() const noexcept { return value_; }

  friend bool operator==(const Degree&, const Degree&) = default;

 private:
  Degree(bool mixed, Lag value) : mixed_(mixed), value_(value) {}
  bool mixed_;
  Lag value_;
};

//! Z(mu,nu) Z(beta,gamma) by the cylinder product rule, or nothing when empty.
std::optional<Cylinder> cylinder_product(const Graph& graph, const Cylinder& left,
                                         const Cylinder& right);

//! A finite sum of scaled cylinder indicators in the Steinberg algebra,
//! always held in normal form: every source path has the same length
//! (depth()), keys are distinct and no coefficient is zero.
class Element {
 public:
  using Terms = std::map<Cylinder, Scalar>;

  //! The zero element.
  Element(GraphPtr graph, Ring ring);

  //! Refines every term to the longest source path, merges and drops zeros.
  //! Throws SourceMismatch for a pair with different sources.
  static Element from_terms(GraphPtr graph, Ring ring,
                            const std::vector<std::pair<Cylinder, Scalar>>& terms);
  static Element indicator(GraphPtr graph, Ring ring, const Cylinder& cylinder);
  //! 1_{Z(v)}.
  static Element vertex_unit(GraphPtr graph, Ring ring, VertexId v);
  //! 1_{Z(path, s(path))}; a vertex path gives 1_{Z(v)}.
  static Element path_generator(GraphPtr graph, Ring ring, const Path& path);
  //! 1_{Z(s(path), path)}.
  static Element ghost_generator(GraphPtr graph, Ring ring, const Path& path);
  //! Sum of all vertex units; the identity of the algebra of a finite graph.
  static Element identity(GraphPtr graph, Ring ring);

  const Graph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  Ring ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t depth() const noexcept { return depth_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  //! The same element with every source path refined to `depth` (no-op when
  //! depth() is already at least that).
  Element refined(std::size_t depth) const;

  friend bool operator==(const Element& a, const Element& b);
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& r, const Element& f);
  Element operator-() const;

 private:
  Element(GraphPtr graph, Ring ring, Terms terms, std::size_t depth)
      : graph_(std::move(graph)), ring_(ring), terms_(std::move(terms)), depth_(depth) {}

  static Element normalize(GraphPtr graph, Ring ring,
                           const std::vector<std::pair<Cylinder, Scalar>>& raw);

  GraphPtr graph_;
  Ring ring_;
  Terms terms_;
  std::size_t depth_ = 0;
};

//! Throws Invalid when the elements live over different graphs, MixedRings
//! when their rings differ.
void require_compatible(const Element& a, const Element& b);

Element star(const Element& f);
Degree degree(const Element& f);
Element homogeneous_component(const Element& f, Lag k);
bool is_diagonal(const Element& f);
//! Prefixes of the unit cylinders in the support; throws NotDiagonal.
std::vector<Path> support_units(const Element& f);
Scalar evaluate(const Element& f, const Arrow& arrow);
//! Value at the unit arrow of x.
Scalar evaluate_at_unit(const Element& f, const Lasso& x);

}  // namespace leavitt
