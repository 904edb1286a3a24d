#include "leavitt/element.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

std::optional<Cylinder> cylinder_product(const Graph& graph, const Cylinder& left,
                                         const Cylinder& right) {
  const Path& mu = left.range_path;
  const Path& nu = left.source_path;
  const Path& beta = right.range_path;
  const Path& gamma = right.source_path;
  if (is_prefix(nu, beta)) {
    Path rest = drop(graph, beta, nu.length());
    return Cylinder{concat(graph, mu, rest), gamma};
  }
  if (is_prefix(beta, nu)) {
    Path rest = drop(graph, nu, beta.length());
    return Cylinder{mu, concat(graph, gamma, rest)};
  }
  return std::nullopt;
}

Element::Element(GraphPtr graph, Ring ring) : graph_(std::move(graph)), ring_(ring) {}

Element Element::normalize(GraphPtr graph, Ring ring,
                           const std::vector<std::pair<Cylinder, Scalar>>& raw) {
  std::size_t depth = 0;
  for (const auto& [cyl, coeff] : raw) {
    require_same_ring(ring, coeff.ring());
    if (cyl.range_path.source() != cyl.source_path.source()) {
      fail(ErrorKind::SourceMismatch, "cylinder paths have different sources");
    }
    depth = std::max(depth, cyl.source_path.length());
  }
  const Graph& g = *graph;
  Terms terms;
  auto accumulate = [&terms](Cylinder cyl, const Scalar& coeff) {
    auto [it, inserted] = terms.try_emplace(std::move(cyl), coeff);
    if (!inserted) it->second += coeff;
  };
  for (const auto& [cyl, coeff] : raw) {
    if (coeff.is_zero()) continue;
    std::size_t missing = depth - cyl.source_path.length();
    if (missing == 0) {
      accumulate(cyl, coeff);
      continue;
    }
    for (const Path& tail : extensions(g, Path::vertex(cyl.source_path.source()), missing)) {
      accumulate(Cylinder{concat(g, cyl.range_path, tail), concat(g, cyl.source_path, tail)}, coeff);
    }
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  if (terms.empty()) depth = 0;
  return Element(std::move(graph), ring, std::move(terms), depth);
}

Element Element::from_terms(GraphPtr graph, Ring ring,
                            const std::vector<std::pair<Cylinder, Scalar>>& terms) {
  return normalize(std::move(graph), ring, terms);
}

Element Element::indicator(GraphPtr graph, Ring ring, const Cylinder& cylinder) {
  return normalize(std::move(graph), ring, {{cylinder, Scalar::one(ring)}});
}

Element Element::vertex_unit(GraphPtr graph, Ring ring, VertexId v) {
  return indicator(std::move(graph), ring, unit_cylinder(Path::vertex(v)));
}

Element Element::path_generator(GraphPtr graph, Ring ring, const Path& path) {
  return indicator(std::move(graph), ring, Cylinder{path, Path::vertex(path.source())});
}

Element Element::ghost_generator(GraphPtr graph, Ring ring, const Path& path) {
  return indicator(std::move(graph), ring, Cylinder{Path::vertex(path.source()), path});
}

Element Element::identity(GraphPtr graph, Ring ring) {
  std::vector<std::pair<Cylinder, Scalar>> raw;
  for (VertexId v = 0; v < graph->vertex_count(); ++v) {
    raw.emplace_back(unit_cylinder(Path::vertex(v)), Scalar::one(ring));
  }
  return normalize(std::move(graph), ring, raw);
}

Element Element::refined(std::size_t depth) const {
  if (depth <= depth_ || terms_.empty()) return *this;
  std::vector<std::pair<Cylinder, Scalar>> expanded;
  const Graph& g = *graph_;
  for (const auto& [cyl, coeff] : terms_) {
    for (const Path& tail :
         extensions(g, Path::vertex(cyl.source_path.source()), depth - depth_)) {
      expanded.emplace_back(
          Cylinder{concat(g, cyl.range_path, tail), concat(g, cyl.source_path, tail)}, coeff);
    }
  }
  Terms terms(expanded.begin(), expanded.end());
  return Element(graph_, ring_, std::move(terms), depth);
}

void require_compatible(const Element& a, const Element& b) {
  if (a.graph_ptr() != b.graph_ptr()) fail(ErrorKind::Invalid, "elements over different graphs");
  require_same_ring(a.ring(), b.ring());
}

bool operator==(const Element& a, const Element& b) {
  require_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  std::size_t depth = std::max(a.depth_, b.depth_);
  return a.refined(depth).terms_ == b.refined(depth).terms_;
}

Element operator+(const Element& a, const Element& b) {
  require_compatible(a, b);
  std::vector<std::pair<Cylinder, Scalar>> raw(a.terms_.begin(), a.terms_.end());
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return Element::normalize(a.graph_, a.ring_, raw);
}

Element Element::operator-() const {
  Terms negated;
  for (const auto& [cyl, coeff] : terms_) negated.emplace(cyl, -coeff);
  return Element(graph_, ring_, std::move(negated), depth_);
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_compatible(a, b);
  std::vector<std::pair<Cylinder, Scalar>> raw;
  const Graph& g = *a.graph_;
  for (const auto& [left, r] : a.terms_) {
    for (const auto& [right, s] : b.terms_) {
      if (auto product = cylinder_product(g, left, right)) raw.emplace_back(*product, r * s);
    }
  }
  return Element::normalize(a.graph_, a.ring_, raw);
}

Element operator*(const Scalar& r, const Element& f) {
  require_same_ring(r.ring(), f.ring_);
  std::vector<std::pair<Cylinder, Scalar>> raw;
  for (const auto& [cyl, coeff] : f.terms_) raw.emplace_back(cyl, r * coeff);
  return Element::normalize(f.graph_, f.ring_, raw);
}

Element star(const Element& f) {
  std::vector<std::pair<Cylinder, Scalar>> raw;
  for (const auto& [cyl, coeff] : f.terms()) {
    raw.emplace_back(Cylinder{cyl.source_path, cyl.range_path}, coeff.conj());
  }
  return Element::from_terms(f.graph_ptr(), f.ring(), raw);
}

Degree degree(const Element& f) {
  if (f.is_zero()) return Degree::homogeneous(0);
  Lag k = f.terms().begin()->first.degree();
  for (const auto& [cyl, coeff] : f.terms()) {
    if (cyl.degree() != k) return Degree::mixed();
  }
  return Degree::homogeneous(k);
}

Element homogeneous_component(const Element& f, Lag k) {
  std::vector<std::pair<Cylinder, Scalar>> raw;
  for (const auto& [cyl, coeff] : f.terms()) {
    if (cyl.degree() == k) raw.emplace_back(cyl, coeff);
  }
  return Element::from_terms(f.graph_ptr(), f.ring(), raw).refined(f.depth());
}

bool is_diagonal(const Element& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& kv) { return kv.first.range_path == kv.first.source_path; });
}

std::vector<Path> support_units(const Element& f) {
  if (!is_diagonal(f)) fail(ErrorKind::NotDiagonal, "element has off-diagonal terms");
  std::vector<Path> out;
  for (const auto& [cyl, coeff] : f.terms()) out.push_back(cyl.source_path);
  std::sort(out.begin(), out.end());
  return out;
}

Scalar evaluate(const Element& f, const Arrow& arrow) {
  Scalar total = Scalar::zero(f.ring());
  for (const auto& [cyl, coeff] : f.terms()) {
    if (contains(f.graph(), cyl, arrow)) total += coeff;
  }
  return total;
}

Scalar evaluate_at_unit(const Element& f, const Lasso& x) {
  if (f.is_zero()) return Scalar::zero(f.ring());
  Path key = x.initial(f.graph(), f.depth());
  auto it = f.terms().find(Cylinder{key, key});
  return it == f.terms().end() ? Scalar::zero(f.ring()) : it->second;
}

}  // namespace leavitt
