#include "leavitt/weyl.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

WeylClass WeylClass::make(Element n, Lasso x) {
  if (!is_normalizer(n)) fail(ErrorKind::NotANormalizer, "class representative");
  return trusted(std::move(n), std::move(x));
}

WeylClass WeylClass::trusted(Element n, Lasso x) {
  PartialMap action = rewrite_rules(n);
  if (!action.in_domain(x)) fail(ErrorKind::OutsideDomain, "base point outside dom(n)");
  Lasso image = action.apply(x);
  return WeylClass(std::move(n), std::move(x), std::move(action), std::move(image));
}

namespace {

// The rule refined along x so that its source path has the given length.
RewriteRule refine_along(const Graph& graph, const RewriteRule& rule, const Lasso& x,
                         std::size_t depth) {
  Path from = x.initial(graph, depth);
  Path extra = drop(graph, from, rule.from.length());
  return RewriteRule{from, concat(graph, rule.to, extra)};
}

}  // namespace

bool germs_agree(const Graph& graph, const RewriteRule& first, const RewriteRule& second,
                 const Lasso& x) {
  if (first.lag() != second.lag()) return false;
  std::size_t depth = std::max(first.from.length(), second.from.length());
  return refine_along(graph, first, x, depth) == refine_along(graph, second, x, depth);
}

bool equivalent(const WeylClass& a, const WeylClass& b) {
  if (a.base() != b.base()) return false;
  const Lasso& x = a.base();
  const Graph& g = a.representative().graph();
  if (auto point = IsolatedPoint::of(g, x)) {
    if (a.image() != b.image()) return false;
    auto c = compress(*point, star(a.representative()) * b.representative());
    return c.has_value() && c->degree == 0;
  }
  return germs_agree(g, *a.action().rule_for(x), *b.action().rule_for(x), x);
}

bool equivalent(const Element& n, const Lasso& x, const Element& m, const Lasso& y) {
  return equivalent(WeylClass::make(n, x), WeylClass::make(m, y));
}

WeylClass weyl_compose(const WeylClass& first, const WeylClass& second) {
  if (second.image() != first.base()) {
    fail(ErrorKind::NotComposable, "alpha of the second class misses the first base point");
  }
  return WeylClass::trusted(first.representative() * second.representative(), second.base());
}

WeylClass weyl_inverse(const WeylClass& c) {
  return WeylClass::trusted(star(c.representative()), c.image());
}

WeylClass weyl_range(const WeylClass& c) {
  return WeylClass::trusted(c.representative() * star(c.representative()), c.image());
}

WeylClass weyl_source(const WeylClass& c) {
  return WeylClass::trusted(star(c.representative()) * c.representative(), c.base());
}

Cylinder minimal_cylinder(const Graph& graph, const Arrow& arrow) {
  const Lasso& x = arrow.range;
  const Lasso& y = arrow.source;
  const Lag k = arrow.lag;
  const Lag bound = std::max<Lag>({static_cast<Lag>(x.prefix().size()),
                                   static_cast<Lag>(y.prefix().size()) + k, 0});
  for (Lag m = std::max<Lag>(0, k); m <= bound; ++m) {
    auto mm = static_cast<std::size_t>(m);
    auto nn = static_cast<std::size_t>(m - k);
    if (shift(graph, x, mm) == shift(graph, y, nn)) return Cylinder{x.initial(graph, mm), y.initial(graph, nn)};
  }
  fail(ErrorKind::Invalid, "arrow endpoints are not shift equivalent with its lag");
}

WeylClass phi(const GraphPtr& graph, Ring ring, const Arrow& arrow) {
  return WeylClass::trusted(Element::indicator(graph, ring, minimal_cylinder(*graph, arrow)),
                            arrow.source);
}

std::pair<Arrow, InverseBranch> phi_inverse_traced(const WeylClass& c) {
  const Element& n = c.representative();
  const Graph& g = n.graph();
  const Lasso& y = c.base();
  const RewriteRule& rule = *c.action().rule_for(y);
  auto point = IsolatedPoint::of(g, y);
  if (!point) return {Arrow{c.image(), rule.lag(), y}, InverseBranch::NonIsolated};
  // y is isolated and, being a lasso, eventually periodic. The rule's lag may
  // differ from the class by whole turns of the cycle; the compression of
  // the rule cylinder against n measures the difference.
  Element rule_cylinder = Element::indicator(n.graph_ptr(), n.ring(), Cylinder{rule.to, rule.from});
  auto offset = compress(*point, star(rule_cylinder) * n);
  if (!offset) fail(ErrorKind::Invalid, "class representative vanishes at its base point");
  Arrow arrow{c.image(), rule.lag() + offset->degree, y};
  if (!lag_equivalent(g, arrow.range, arrow.lag, arrow.source)) {
    fail(ErrorKind::Invalid, "corrected lag does not give an arrow");
  }
  return {arrow, InverseBranch::IsolatedPeriodic};
}

Arrow phi_inverse(const WeylClass& c) { return phi_inverse_traced(c).first; }

LagSplit lag_decompose(const Graph& graph, const Lasso& x, const Path& mu, const Path& nu) {
  Lasso through_nu = prepend(graph, nu, x);
  Lasso through_mu = prepend(graph, mu, x);
  const auto& cycle = through_nu.cycle();
  const auto& other = through_mu.cycle();
  if (cycle.size() != other.size()) fail(ErrorKind::NotEventuallyPeriodic, "tails differ");
  std::size_t offset = cycle.size();
  for (std::size_t r = 0; r < other.size(); ++r) {
    std::vector<EdgeId> rotated(other.begin() + r, other.end());
    rotated.insert(rotated.end(), other.begin(), other.begin() + r);
    if (rotated == cycle) {
      offset = r;
      break;
    }
  }
  if (offset == cycle.size()) fail(ErrorKind::NotEventuallyPeriodic, "tails differ");
  const Lag stem_nu = static_cast<Lag>(through_nu.prefix().size());
  const Lag stem_mu = static_cast<Lag>(through_mu.prefix().size() + offset);
  const Lag period = static_cast<Lag>(cycle.size());
  const Lag diff = static_cast<Lag>(mu.length()) - static_cast<Lag>(nu.length()) - stem_mu + stem_nu;
  if (diff % period != 0) fail(ErrorKind::NotEventuallyPeriodic, "lag is not a whole number of turns");
  Lag q = diff / period;
  if (q >= 0) return LagSplit{static_cast<std::size_t>(q), 0};
  return LagSplit{0, static_cast<std::size_t>(-q)};
}

}  // namespace leavitt
