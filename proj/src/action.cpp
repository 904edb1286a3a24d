#include "leavitt/action.hpp"

#include <algorithm>
#include <map>

#include "leavitt/error.hpp"

namespace leavitt {

std::size_t normalizer_check_depth(const Element& n) {
  std::size_t longest = 0;
  for (const auto& [cyl, coeff] : n.terms()) longest = std::max(longest, cyl.range_path.length());
  return n.depth() + 2 * longest;
}

bool conjugates_diagonal_at(const Element& n, std::size_t depth) {
  if (n.is_zero()) return true;
  const Element adjoint = star(n);
  for (const Path& tau : paths_of_length(n.graph(), depth)) {
    Element d = Element::indicator(n.graph_ptr(), n.ring(), unit_cylinder(tau));
    if (!is_diagonal(n * d * adjoint)) return false;
    if (!is_diagonal(adjoint * d * n)) return false;
  }
  return true;
}

bool is_normalizer(const Element& n) {
  std::size_t depth = normalizer_check_depth(n);
  return conjugates_diagonal_at(n, depth) && conjugates_diagonal_at(n, depth + 1);
}

std::vector<Path> dom(const Element& n) {
  if (!is_normalizer(n)) fail(ErrorKind::NotANormalizer, "dom of a non-normalizer");
  return support_units(star(n) * n);
}

std::vector<Path> ran(const Element& n) {
  if (!is_normalizer(n)) fail(ErrorKind::NotANormalizer, "ran of a non-normalizer");
  return support_units(n * star(n));
}

bool cylinder_covered(const Graph& graph, const Path& path, const std::vector<Path>& prefixes) {
  std::size_t longest = path.length();
  for (const Path& p : prefixes) longest = std::max(longest, p.length());
  for (const Path& ext : extensions(graph, path, longest - path.length())) {
    bool hit = std::any_of(prefixes.begin(), prefixes.end(),
                           [&](const Path& p) { return is_prefix(p, ext); });
    if (!hit) return false;
  }
  return true;
}

bool in_union(const Lasso& x, const std::vector<Path>& prefixes) {
  return std::any_of(prefixes.begin(), prefixes.end(),
                     [&](const Path& p) { return x.starts_with(p); });
}

std::optional<Lasso> fixed_point(const Graph& graph, const RewriteRule& rule) {
  const Path* shorter = &rule.from;
  const Path* longer = &rule.to;
  if (rule.lag() == 0) return std::nullopt;
  if (rule.lag() < 0) std::swap(shorter, longer);
  if (!is_prefix(*shorter, *longer)) return std::nullopt;
  const auto& edges = longer->edges();
  std::vector<EdgeId> stem(edges.begin(), edges.begin() + shorter->length());
  std::vector<EdgeId> cycle(edges.begin() + shorter->length(), edges.end());
  return Lasso::make(graph, std::move(stem), std::move(cycle));
}

PartialMap::PartialMap(GraphPtr graph, std::vector<RewriteRule> rules)
    : graph_(std::move(graph)), rules_(std::move(rules)) {}

const RewriteRule* PartialMap::rule_for(const Lasso& x) const {
  for (const RewriteRule& rule : rules_) {
    if (x.starts_with(rule.from)) return &rule;
  }
  return nullptr;
}

Lasso PartialMap::apply(const Lasso& x) const {
  const RewriteRule* rule = rule_for(x);
  if (rule == nullptr) fail(ErrorKind::OutsideDomain, "no rewrite rule covers the path");
  return prepend(*graph_, rule->to, shift(*graph_, x, rule->from.length()));
}

PartialMap PartialMap::inverse() const {
  std::vector<RewriteRule> reversed;
  for (const RewriteRule& rule : rules_) reversed.push_back(RewriteRule{rule.to, rule.from});
  return PartialMap(graph_, std::move(reversed));
}

PartialMap rewrite_rules(const Element& n) {
  const Graph& g = n.graph();
  std::vector<Path> domain = support_units(star(n) * n);
  std::vector<RewriteRule> rules;
  // Terms are ordered by source path, so each group is contiguous and its
  // first member carries the least range path.
  for (auto it = n.terms().begin(); it != n.terms().end();) {
    const Path& from = it->first.source_path;
    const Path& to = it->first.range_path;
    auto group_end = std::find_if(it, n.terms().end(),
                                  [&](const auto& kv) { return kv.first.source_path != from; });
    if (std::next(it) != group_end) {
      Lasso sample = first_continuation(g, from);
      Lasso tail = shift(g, sample, from.length());
      Lasso expected = prepend(g, to, tail);
      for (auto other = std::next(it); other != group_end; ++other) {
        if (prepend(g, other->first.range_path, tail) != expected) {
          fail(ErrorKind::InconsistentAction,
               "terms over one source path rewrite a sample path differently");
        }
      }
    }
    if (cylinder_covered(g, from, domain)) rules.push_back(RewriteRule{from, to});
    it = group_end;
  }
  return PartialMap(n.graph_ptr(), std::move(rules));
}

PartialMap alpha(const Element& n) {
  if (!is_normalizer(n)) fail(ErrorKind::NotANormalizer, "alpha of a non-normalizer");
  return rewrite_rules(n);
}

Lasso apply_alpha(const PartialMap& map, const Lasso& x) { return map.apply(x); }

Element pull_back(const Element& d, const PartialMap& map) {
  const Graph& g = d.graph();
  std::vector<std::pair<Cylinder, Scalar>> raw;
  for (const RewriteRule& rule : map.rules()) {
    for (const auto& [cyl, coeff] : d.terms()) {
      if (cyl.range_path != cyl.source_path) fail(ErrorKind::NotDiagonal, "pull_back of non-diagonal");
      const Path& p = cyl.source_path;
      if (is_prefix(p, rule.to)) {
        raw.emplace_back(unit_cylinder(rule.from), coeff);
      } else if (is_prefix(rule.to, p)) {
        Path rest = drop(g, p, rule.to.length());
        raw.emplace_back(unit_cylinder(concat(g, rule.from, rest)), coeff);
      }
    }
  }
  return Element::from_terms(d.graph_ptr(), d.ring(), raw);
}

std::optional<IsolatedPoint> IsolatedPoint::of(const Graph& graph, const Lasso& x) {
  auto depth = isolation_depth(graph, x);
  if (!depth) return std::nullopt;
  return IsolatedPoint(x, *depth);
}

IsolatedPoint IsolatedPoint::make(const Graph& graph, const Lasso& x) {
  auto point = of(graph, x);
  if (!point) fail(ErrorKind::Invalid, "path is not isolated");
  return *point;
}

Element IsolatedPoint::projection(GraphPtr graph, Ring ring) const {
  Path key = point_.initial(*graph, depth_);
  return Element::indicator(std::move(graph), ring, unit_cylinder(key));
}

std::optional<Compression> compress(const IsolatedPoint& x, const Element& n) {
  Element p = x.projection(n.graph_ptr(), n.ring());
  Element product = p * n * p;
  if (product.is_zero()) return std::nullopt;
  if (product.terms().size() != 1) {
    fail(ErrorKind::MalformedCompression, "compression has " +
                                              std::to_string(product.terms().size()) + " terms");
  }
  const auto& [cyl, coeff] = *product.terms().begin();
  Arrow loop{x.point(), cyl.degree(), x.point()};
  if (!contains(n.graph(), cyl, loop)) {
    fail(ErrorKind::MalformedCompression, "compression is not supported at the isolated point");
  }
  return Compression{coeff, cyl.degree()};
}

Scalar compress_scalar(const IsolatedPoint& x, const Element& a) {
  Degree deg = degree(a);
  if (!deg.is_homogeneous() || deg.value() != 0) {
    fail(ErrorKind::NotZeroGraded, "compress_scalar needs a degree-0 element");
  }
  auto c = compress(x, a);
  if (!c) return Scalar::zero(a.ring());
  return c->coefficient;
}

}  // namespace leavitt
