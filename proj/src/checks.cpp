#include "leavitt/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "leavitt/error.hpp"
#include "leavitt/text.hpp"

namespace leavitt {

void PropertyResult::check(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  if (failures == 0) first_failure = what;
  ++failures;
}

PropertyResult merge(std::string name, const std::vector<PropertyResult>& parts) {
  PropertyResult out;
  out.name = std::move(name);
  for (const PropertyResult& part : parts) {
    out.cases += part.cases;
    if (part.failures > 0 && out.failures == 0) {
      out.first_failure = part.name.empty() ? part.first_failure : part.name + ": " + part.first_failure;
    }
    out.failures += part.failures;
    if (!part.notes.empty()) {
      if (!out.notes.empty()) out.notes += "; ";
      out.notes += part.name.empty() ? part.notes : part.name + ": " + part.notes;
    }
  }
  return out;
}

namespace {

PropertyResult named(std::string name) {
  PropertyResult out;
  out.name = std::move(name);
  return out;
}

// Runs body, turning a library error into a failed case.
void guarded(PropertyResult& result, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    result.check(false, what + " threw " + e.what());
  }
}

std::string lasso_text(const Graph& graph, const Lasso& x) { return format_lasso(graph, x); }

Element unit_of(const GraphPtr& graph, Ring ring, const Path& path) {
  return Element::indicator(graph, ring, unit_cylinder(path));
}

// Isolated lassos of description size at most max_size.
std::vector<IsolatedPoint> isolated_points(const Graph& graph, std::size_t max_size) {
  std::vector<IsolatedPoint> out;
  for (const Lasso& x : lassos_up_to(graph, max_size)) {
    if (auto p = IsolatedPoint::of(graph, x)) out.push_back(*p);
  }
  return out;
}

}  // namespace

// ---- oracles -------------------------------------------------------------

Scalar convolution_oracle(const Element& f, const Element& g, const Arrow& arrow) {
  require_compatible(f, g);
  const Graph& graph = f.graph();
  Scalar sum = Scalar::zero(f.ring());
  // Every factorization arrow = a b with g(b) != 0 has b in some term
  // cylinder of g, and b is then determined by that cylinder.
  std::set<Arrow> seen;
  for (const auto& [c, r] : g.terms()) {
    if (!arrow.source.starts_with(c.source_path)) continue;
    Arrow b = arrow_at_source(graph, c, arrow.source);
    if (!seen.insert(b).second) continue;
    Arrow a = compose(arrow, invert(b));
    sum += evaluate(f, a) * evaluate(g, b);
  }
  return sum;
}

bool normalizer_oracle(const Element& n, std::size_t extra) {
  std::size_t top = normalizer_check_depth(n) + extra;
  for (std::size_t depth = 0; depth <= top; ++depth) {
    if (!conjugates_diagonal_at(n, depth)) return false;
  }
  return true;
}

bool germ_oracle(const Graph& graph, const RewriteRule& first, const RewriteRule& second,
                 const Lasso& x, const std::vector<Lasso>& lassos) {
  if (!x.starts_with(first.from) || !x.starts_with(second.from)) return false;
  std::size_t top = std::max(first.from.length(), second.from.length()) + 2;
  for (std::size_t m = 0; m <= top; ++m) {
    Path window = x.initial(graph, m);
    bool agree = true;
    for (const Lasso& z : lassos) {
      if (!z.starts_with(window)) continue;
      if (!z.starts_with(first.from) || !z.starts_with(second.from)) {
        agree = false;
        break;
      }
      Lasso a = prepend(graph, first.to, shift(graph, z, first.from.length()));
      Lasso b = prepend(graph, second.to, shift(graph, z, second.from.length()));
      if (Arrow{a, first.lag(), z} != Arrow{b, second.lag(), z}) {
        agree = false;
        break;
      }
    }
    if (agree) return true;
  }
  return false;
}

std::vector<Arrow> support_arrows_at(const Element& f, const Lasso& y) {
  std::vector<Arrow> out;
  for (const auto& [c, r] : f.terms()) {
    if (y.starts_with(c.source_path)) out.push_back(arrow_at_source(f.graph(), c, y));
  }
  return out;
}

// ---- algebra ---------------------------------------------------------------

PropertyResult check_leavitt_family(const GraphPtr& graph, Ring ring) {
  PropertyResult out = named("leavitt-family");
  const Graph& g = *graph;
  auto p = [&](VertexId v) { return Element::vertex_unit(graph, ring, v); };
  auto s = [&](EdgeId e) { return Element::path_generator(graph, ring, Path::edge(g, e)); };
  auto t = [&](EdgeId e) { return Element::ghost_generator(graph, ring, Path::edge(g, e)); };
  Element zero(graph, ring);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.check(p(v) * p(v) == p(v), "p_" + g.vertex_name(v) + " is not idempotent");
    out.check(star(p(v)) == p(v), "p_" + g.vertex_name(v) + " is not self-adjoint");
    for (VertexId w = v + 1; w < g.vertex_count(); ++w) {
      out.check((p(v) * p(w)).is_zero(), "p_" + g.vertex_name(v) + " p_" + g.vertex_name(w) + " != 0");
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::string& name = g.edge_name(e);
    out.check(p(g.range(e)) * s(e) == s(e), "L1 range side fails for " + name);
    out.check(s(e) * p(g.source(e)) == s(e), "L1 source side fails for " + name);
    out.check(p(g.source(e)) * t(e) == t(e), "L2 range side fails for " + name);
    out.check(t(e) * p(g.range(e)) == t(e), "L2 source side fails for " + name);
    out.check(star(s(e)) == t(e), "ghost of " + name + " is not the adjoint");
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
      Element expected = e == f ? p(g.source(e)) : zero;
      out.check(t(e) * s(f) == expected, "L3 fails for " + name + ", " + g.edge_name(f));
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Element sum = zero;
    for (EdgeId e : g.range_edges(v)) sum = sum + s(e) * t(e);
    out.check(sum == p(v), "L4 fails at " + g.vertex_name(v));
  }
  return out;
}

PropertyResult check_convolution(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                 std::size_t pairs, std::size_t arrows) {
  PropertyResult out = named("convolution");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    Element f = sampler.element(3, 2);
    Element g = sampler.element(3, 2);
    Element product = f * g;
    for (std::size_t j = 0; j < arrows; ++j) {
      Arrow arrow = sampler.arrow(4, 2);
      // Half the arrows are drawn from the support of the product so that
      // nonzero values are exercised too.
      if (!product.is_zero() && sampler.below(2) == 0) {
        auto it = product.terms().begin();
        std::advance(it, static_cast<long>(sampler.below(product.terms().size())));
        arrow = arrow_at_source(*graph, it->first, sampler.lasso_through(it->first.source_path, 3));
      }
      Scalar direct = evaluate(product, arrow);
      Scalar oracle = convolution_oracle(f, g, arrow);
      out.check(direct == oracle, "(" + format_element(f) + ") * (" + format_element(g) + ") at " +
                                      format_arrow(*graph, arrow) + ": " + direct.to_string() +
                                      " vs oracle " + oracle.to_string());
    }
  }
  return out;
}

PropertyResult check_ring_laws(const GraphPtr& graph, Ring ring, std::uint64_t seed, std::size_t triples) {
  PropertyResult out = named("ring-laws");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < triples; ++i) {
    Element f = sampler.element(3, 2);
    Element g = sampler.element(3, 2);
    Element h = sampler.element(3, 2);
    Scalar r = sampler.scalar(3);
    std::string at = " for f = " + format_element(f) + ", g = " + format_element(g) + ", h = " +
                     format_element(h);
    out.check((f * g) * h == f * (g * h), "associativity" + at);
    out.check(f * (g + h) == f * g + f * h, "left distributivity" + at);
    out.check((f + g) * h == f * h + g * h, "right distributivity" + at);
    out.check(f + g == g + f, "commutative addition" + at);
    out.check((f - f).is_zero(), "f - f != 0" + at);
    out.check(star(f * g) == star(g) * star(f), "star reverses products" + at);
    out.check(star(star(f)) == f, "star is not an involution" + at);
    out.check(star(r * f) == r.conj() * star(f), "star is not conjugate linear" + at);
    out.check(r * (f * g) == (r * f) * g, "scalars do not commute with products" + at);
    Element one = Element::identity(graph, ring);
    out.check(one * f == f && f * one == f, "identity law" + at);
  }
  return out;
}

PropertyResult check_grading(const GraphPtr& graph, Ring ring, std::uint64_t seed, std::size_t cases) {
  PropertyResult out = named("grading");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < cases; ++i) {
    Element f = sampler.element(4, 2);
    Element g = sampler.element(4, 2);
    Element sum(graph, ring);
    std::set<Lag> degrees;
    for (const auto& [c, r] : f.terms()) degrees.insert(c.degree());
    for (Lag k : degrees) sum = sum + homogeneous_component(f, k);
    out.check(sum == f, "components do not sum to " + format_element(f));

    Lag k1 = f.terms().empty() ? 0 : f.terms().begin()->first.degree();
    Lag k2 = g.terms().empty() ? 0 : g.terms().rbegin()->first.degree();
    Element a = homogeneous_component(f, k1);
    Element b = homogeneous_component(g, k2);
    Element ab = a * b;
    out.check(ab.is_zero() || degree(ab) == Degree::homogeneous(k1 + k2),
              "degree of " + format_element(ab) + " is not " + std::to_string(k1 + k2));
    out.check(degree(star(a)) == (a.is_zero() ? degree(a) : Degree::homogeneous(-k1)),
              "star does not negate the degree of " + format_element(a));
  }
  return out;
}

PropertyResult check_literal_round_trip(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                        std::size_t cases) {
  PropertyResult out = named("literal-round-trip");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < cases; ++i) {
    Element f = sampler.element(4, 3);
    std::string text = format_element(f);
    out.check(parse_element(graph, ring, text) == f, "element " + text);
    Lasso x = sampler.lasso(6);
    out.check(parse_lasso(*graph, format_lasso(*graph, x)) == x, "lasso " + format_lasso(*graph, x));
    Arrow a = sampler.arrow(5, 3);
    out.check(parse_arrow(*graph, format_arrow(*graph, a)) == a, "arrow " + format_arrow(*graph, a));
  }
  return out;
}

// ---- action ----------------------------------------------------------------

PropertyResult check_support_isotropy(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                      std::size_t normalizers, std::size_t lassos) {
  PropertyResult out = named("support-isotropy");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < normalizers; ++i) {
    Element n = sampler.normalizer(3, 2);
    // Products with diagonals keep normalizers but vary the coefficients.
    if (sampler.below(2) == 0) n = sampler.diagonal(2, 2) * n;
    if (n.is_zero()) n = sampler.normalizer(3, 2);
    for (std::size_t j = 0; j < lassos; ++j) {
      Lasso y = sampler.lasso(5);
      if (sampler.below(2) == 0) {
        auto it = n.terms().begin();
        std::advance(it, static_cast<long>(sampler.below(n.terms().size())));
        y = sampler.lasso_through(it->first.source_path, 3);
      }
      std::vector<Arrow> arrows = support_arrows_at(n, y);
      bool same = std::all_of(arrows.begin(), arrows.end(),
                              [&](const Arrow& a) { return a.range == arrows.front().range; });
      out.check(same, "supp(" + format_element(n) + ") has arrows with source " +
                          lasso_text(*graph, y) + " and different ranges");
    }
  }
  return out;
}

PropertyResult check_conjugation_law(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                     std::size_t pairs) {
  PropertyResult out = named("conjugation-law");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    Element n = sampler.normalizer(3, 2);
    Element d = sampler.diagonal(3, 3);
    std::string at = " for n = " + format_element(n) + ", d = " + format_element(d);
    guarded(out, "conjugation" + at, [&] {
      Element lhs = star(n) * d * n;
      Element rhs = pull_back(d, alpha(n)) * star(n) * n;
      out.check(lhs == rhs, "n* d n = " + format_element(lhs) + " but (d o alpha_n) n* n = " +
                                format_element(rhs) + at);
    });
  }
  return out;
}

PropertyResult check_action_composition(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                        std::size_t pairs, std::size_t lassos) {
  PropertyResult out = named("action-composition");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    Lasso x = sampler.lasso(4);
    Element n = sampler.normalizer_at(x, 2, 2);
    PartialMap an = alpha(n);
    Element m = sampler.normalizer_at(an.apply(x), 2, 2);
    PartialMap am = alpha(m);
    PartialMap amn = alpha(m * n);
    PartialMap anstar = alpha(star(n));
    std::vector<Path> range_n = ran(n);
    std::string at = " for m = " + format_element(m) + ", n = " + format_element(n);
    for (std::size_t j = 0; j < lassos; ++j) {
      // Lassos near x, where the maps are defined, and lassos anywhere.
      Lasso z = sampler.below(3) == 0 ? sampler.lasso(5)
                                      : sampler.lasso_through(x.initial(*graph, sampler.below(4)), 4);
      std::string here = at + " at " + lasso_text(*graph, z);
      bool composite = an.in_domain(z) && am.in_domain(an.apply(z));
      out.check(amn.in_domain(z) == composite, "dom(alpha_mn) differs" + here);
      if (composite && amn.in_domain(z)) {
        out.check(amn.apply(z) == am.apply(an.apply(z)), "alpha_mn != alpha_m alpha_n" + here);
      }
      out.check(anstar.in_domain(z) == in_union(z, range_n), "dom(alpha_n*) != ran(n)" + here);
      if (an.in_domain(z)) {
        Lasso w = an.apply(z);
        out.check(anstar.in_domain(w) && anstar.apply(w) == z, "alpha_n* alpha_n != id" + here);
      }
      if (anstar.in_domain(z)) {
        out.check(an.apply(anstar.apply(z)) == z, "alpha_n alpha_n* != id" + here);
      }
    }
  }
  return out;
}

// ---- isolated points -------------------------------------------------------

PropertyResult check_compression_shape(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                       std::size_t normalizers) {
  PropertyResult out = named("compression-shape");
  std::vector<IsolatedPoint> points = isolated_points(*graph, 4);
  if (points.empty()) {
    out.notes = "no isolated points";
    return out;
  }
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < normalizers; ++i) {
    Element n = sampler.normalizer(3, 2);
    for (const IsolatedPoint& p : points) {
      std::string at = " for n = " + format_element(n) + " at " + lasso_text(*graph, p.point());
      guarded(out, "compress" + at, [&] {
        Element px = p.projection(graph, ring);
        Element direct = px * n * px;
        auto c = compress(p, n);
        if (direct.is_zero()) {
          out.check(!c.has_value(), "compress is nonzero but p n p = 0" + at);
          return;
        }
        bool single = direct.terms().size() == 1;
        Lag cycle = static_cast<Lag>(p.point().cycle().size());
        Lag k = direct.terms().begin()->first.degree();
        out.check(single && k % cycle == 0, "p n p = " + format_element(direct) + at);
        out.check(c && c->degree == k && c->coefficient == direct.terms().begin()->second,
                  "compress disagrees with p n p = " + format_element(direct) + at);
      });
    }
  }
  return out;
}

PropertyResult check_compression_scalar(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                        std::size_t cases) {
  PropertyResult out = named("compression-scalar");
  std::vector<IsolatedPoint> points = isolated_points(*graph, 4);
  if (points.empty()) {
    out.notes = "no isolated points";
    return out;
  }
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < cases; ++i) {
    Element a = homogeneous_component(sampler.element(4, 2), 0);
    const IsolatedPoint& p = points[sampler.below(points.size())];
    std::string at = " for a = " + format_element(a) + " at " + lasso_text(*graph, p.point());
    guarded(out, "compress_scalar" + at, [&] {
      Element px = p.projection(graph, ring);
      Scalar r = compress_scalar(p, a);
      out.check(px * a * px == r * px, "p a p != " + r.to_string() + " p" + at);
    });
  }
  return out;
}

PropertyResult check_projection_intertwining(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                             std::size_t normalizers) {
  PropertyResult out = named("projection-intertwining");
  std::vector<IsolatedPoint> points = isolated_points(*graph, 4);
  if (points.empty()) {
    out.notes = "no isolated points";
    return out;
  }
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < normalizers; ++i) {
    const IsolatedPoint& p = points[sampler.below(points.size())];
    Element n = sampler.normalizer_at(p.point(), 3, 2);
    std::string at = " for n = " + format_element(n) + " at " + lasso_text(*graph, p.point());
    guarded(out, "intertwining" + at, [&] {
      Lasso y = alpha(n).apply(p.point());
      Element py = IsolatedPoint::make(*graph, y).projection(graph, ring);
      out.check(n * p.projection(graph, ring) == py * n, "n p_x != p_y n" + at);
    });
  }
  return out;
}

// ---- Weyl groupoid ---------------------------------------------------------

namespace {

// Normalizers related to n at x in known ways; the flag says whether the
// variant is equivalent to n at x.
std::vector<std::pair<Element, bool>> variants(Sampler& sampler, const GraphPtr& graph, Ring ring,
                                               const Element& n, const Lasso& x) {
  std::vector<std::pair<Element, bool>> out;
  out.emplace_back(n, true);
  Element restricted = n * unit_of(graph, ring, x.initial(*graph, sampler.below(4)));
  out.emplace_back(restricted, true);
  out.emplace_back(sampler.unit() * n, true);
  // Composing with the cycle shift fixes x but changes the germ (and the
  // isotropy degree at isolated x).
  Path pre = x.initial(*graph, x.prefix().size());
  Path loop = x.initial(*graph, x.prefix().size() + x.cycle().size());
  out.emplace_back(n * Element::indicator(graph, ring, Cylinder{loop, pre}), false);
  return out;
}

}  // namespace

PropertyResult check_weyl_equivalence(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                      std::size_t triples) {
  PropertyResult out = named("weyl-equivalence");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < triples; ++i) {
    Lasso x = sampler.lasso(4);
    Element n = sampler.normalizer_at(x, 2, 2);
    std::vector<std::pair<Element, bool>> pool = variants(sampler, graph, ring, n, x);
    pool.emplace_back(sampler.normalizer_at(x, 2, 2), false);
    std::vector<WeylClass> classes;
    for (const auto& [m, equal] : pool) classes.push_back(WeylClass::make(m, x));
    std::string at = " at " + lasso_text(*graph, x) + " from " + format_element(n);
    for (std::size_t a = 0; a < classes.size(); ++a) {
      out.check(equivalent(classes[a], classes[a]), "not reflexive" + at);
      for (std::size_t b = 0; b < classes.size(); ++b) {
        bool ab = equivalent(classes[a], classes[b]);
        out.check(ab == equivalent(classes[b], classes[a]), "not symmetric" + at);
        if (a == 0 && b != pool.size() - 1) {
          out.check(ab == pool[b].second, "variant " + std::to_string(b) + " misjudged" + at);
        }
        for (std::size_t c = 0; c < classes.size(); ++c) {
          if (ab && equivalent(classes[b], classes[c])) {
            out.check(equivalent(classes[a], classes[c]), "not transitive" + at);
          }
        }
      }
    }
  }
  return out;
}

PropertyResult check_phi_homomorphism(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                      std::size_t pairs) {
  PropertyResult out = named("phi-homomorphism");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    Arrow h = sampler.arrow(4, 2);
    Arrow g = sampler.arrow_with_source(h.range, 2);
    std::string at = " for g = " + format_arrow(*graph, g) + ", h = " + format_arrow(*graph, h);
    guarded(out, "phi" + at, [&] {
      WeylClass gh = phi(graph, ring, compose(g, h));
      out.check(equivalent(gh, weyl_compose(phi(graph, ring, g), phi(graph, ring, h))),
                "phi(gh) !~ phi(g) phi(h)" + at);
      out.check(equivalent(phi(graph, ring, invert(g)), weyl_inverse(phi(graph, ring, g))),
                "phi(g^-1) !~ phi(g)^-1" + at);
    });
  }
  return out;
}

namespace {

void count_branch(BranchCounts& counts, InverseBranch branch) {
  switch (branch) {
    case InverseBranch::NonIsolated: ++counts.non_isolated; break;
    case InverseBranch::IsolatedAperiodic: ++counts.isolated_aperiodic; break;
    case InverseBranch::IsolatedPeriodic: ++counts.isolated_periodic; break;
  }
}

std::string branch_notes(const BranchCounts& counts) {
  std::ostringstream out;
  out << "branches non-isolated=" << counts.non_isolated
      << " isolated-aperiodic=" << counts.isolated_aperiodic
      << " isolated-periodic=" << counts.isolated_periodic;
  return out.str();
}

PropertyResult phi_round_trips(const GraphPtr& graph, Ring ring, std::uint64_t seed, std::size_t samples,
                               BranchCounts& counts) {
  PropertyResult out = named("phi-round-trips");
  Sampler sampler(graph, ring, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Arrow g = sampler.arrow(4, 2);
    guarded(out, "phi of " + format_arrow(*graph, g), [&] {
      auto [back, branch] = phi_inverse_traced(phi(graph, ring, g));
      count_branch(counts, branch);
      out.check(back == g, "phi_inverse(phi(g)) = " + format_arrow(*graph, back) + " for g = " +
                               format_arrow(*graph, g));
    });
    Lasso x = sampler.lasso(4);
    Element n = sampler.normalizer_at(x, 3, 2);
    std::string at = " for [" + format_element(n) + ", " + lasso_text(*graph, x) + "]";
    guarded(out, "phi_inverse" + at, [&] {
      WeylClass c = WeylClass::make(n, x);
      auto [arrow, branch] = phi_inverse_traced(c);
      count_branch(counts, branch);
      out.check(equivalent(phi(graph, ring, arrow), c), "phi(phi_inverse(c)) !~ c" + at);
    });
  }
  return out;
}

}  // namespace

PropertyResult check_phi_round_trips(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                     std::size_t samples) {
  BranchCounts counts;
  PropertyResult out = phi_round_trips(graph, ring, seed, samples, counts);
  out.notes = branch_notes(counts);
  return out;
}

BranchCounts phi_inverse_branches(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                  std::size_t samples) {
  BranchCounts counts;
  phi_round_trips(graph, ring, seed, samples, counts);
  return counts;
}

// ---- Stone duality ---------------------------------------------------------

namespace {

CompactOpen random_set(Sampler& sampler, const GraphPtr& graph) {
  std::vector<Path> prefixes;
  for (std::size_t k = sampler.below(4); k > 0; --k) prefixes.push_back(sampler.path(3));
  return CompactOpen::make(graph, prefixes);
}

// Computes kappa once per point.
class KappaCache {
 public:
  explicit KappaCache(const VerifiedIso& iso) : iso_(iso) {}
  const Lasso& operator()(const Lasso& x) {
    auto it = values_.find(x);
    if (it == values_.end()) it = values_.emplace(x, induce_kappa(iso_, x)).first;
    return it->second;
  }

 private:
  const VerifiedIso& iso_;
  std::map<Lasso, Lasso> values_;
};

}  // namespace

PropertyResult check_boolean_laws(const GraphPtr& graph, std::uint64_t seed, std::size_t triples) {
  PropertyResult out = named("boolean-laws");
  Sampler sampler(graph, Ring::Integer, seed);
  CompactOpen top = CompactOpen::whole(graph);
  CompactOpen bottom = CompactOpen::empty(graph);
  for (std::size_t i = 0; i < triples; ++i) {
    CompactOpen a = random_set(sampler, graph);
    CompactOpen b = random_set(sampler, graph);
    CompactOpen c = random_set(sampler, graph);
    std::string at = " for " + format_compact_open(a) + ", " + format_compact_open(b) + ", " +
                     format_compact_open(c);
    out.check(meet(a, b) == meet(b, a) && join(a, b) == join(b, a), "commutativity" + at);
    out.check(meet(meet(a, b), c) == meet(a, meet(b, c)) && join(join(a, b), c) == join(a, join(b, c)),
              "associativity" + at);
    out.check(meet(a, join(a, b)) == a && join(a, meet(a, b)) == a, "absorption" + at);
    out.check(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)), "meet distributes" + at);
    out.check(join(a, meet(b, c)) == meet(join(a, b), join(a, c)), "join distributes" + at);
    CompactOpen complement = difference(top, a);
    out.check(meet(a, complement) == bottom && join(a, complement) == top, "complement" + at);
    out.check(leq(meet(a, b), a) && leq(a, join(a, b)), "order" + at);
    out.check(leq(a, b) == (meet(a, b) == a), "leq is not the lattice order" + at);
    out.check(difference(a, b) == meet(a, difference(top, b)), "difference" + at);

    Element ia = set_to_idempotent(a, Ring::Integer);
    Element ib = set_to_idempotent(b, Ring::Integer);
    out.check(idempotent_to_set(ia) == a, "idempotent round trip" + at);
    out.check(set_to_idempotent(meet(a, b), Ring::Integer) == ia * ib, "meet is the product" + at);
    out.check(set_to_idempotent(join(a, b), Ring::Integer) == ia + ib - ia * ib, "join formula" + at);

    Lasso z = sampler.lasso(5);
    out.check(meet(a, b).contains(z) == (a.contains(z) && b.contains(z)) &&
                  join(a, b).contains(z) == (a.contains(z) || b.contains(z)) &&
                  complement.contains(z) == !a.contains(z),
              "pointwise membership at " + lasso_text(*graph, z) + at);
  }
  return out;
}

PropertyResult check_rho_round_trip(const GraphPtr& graph, std::size_t max_size) {
  PropertyResult out = named("rho-round-trip");
  for (const Lasso& x : lassos_up_to(*graph, max_size)) {
    FilterChain chain(graph, x);
    bool members = true;
    for (std::size_t m = 0; m <= max_size + 1; ++m) {
      members = members && chain.contains(chain.basis(m)) &&
                (m == 0 || leq(chain.basis(m), chain.basis(m - 1)));
    }
    out.check(members, "basis of " + lasso_text(*graph, x) + " is not a decreasing chain at x");
    out.check(rho_inverse(chain) == x, "rho_inverse does not return " + lasso_text(*graph, x));
  }
  return out;
}

PropertyResult check_kappa_iff(const VerifiedIso& iso, std::size_t depth, std::size_t points,
                               std::size_t direct, std::uint64_t seed) {
  PropertyResult out = named("kappa-iff");
  const GraphPtr& source = iso.spec().source;
  Ring ring = iso.spec().ring;
  std::vector<Path> paths = paths_of_length(*source, depth);
  if (paths.size() > 24) fail(ErrorKind::Invalid, "too many cylinders for the exhaustive kappa check");
  Sampler sampler(source, ring, seed);
  KappaCache kappa(iso);

  std::vector<std::vector<Path>> image_supports;
  for (const Path& p : paths) image_supports.push_back(support_units(extend_pi(iso, unit_of(source, ring, p))));

  std::vector<Lasso> xs;
  std::vector<std::uint32_t> in_set;
  std::vector<std::uint32_t> in_image;
  for (std::size_t i = 0; i < points; ++i) {
    Lasso x = sampler.lasso(5);
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (x.starts_with(paths[j])) a |= 1u << j;
      if (in_union(kappa(x), image_supports[j])) b |= 1u << j;
    }
    xs.push_back(x);
    in_set.push_back(a);
    in_image.push_back(b);
  }
  // Every compact open of depth at most `depth` is a union of depth-level
  // cylinders, and pi(1_L) is the sum of the images of those cylinders.
  std::uint64_t subsets = std::uint64_t{1} << paths.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      bool lhs = (mask & in_set[i]) != 0;
      bool rhs = (mask & in_image[i]) != 0;
      if (lhs != rhs) {
        out.check(false, "subset mask " + std::to_string(mask) + " at " + lasso_text(*source, xs[i]));
      }
    }
  }
  out.cases += subsets * xs.size();

  for (std::size_t i = 0; i < direct; ++i) {
    CompactOpen set = random_set(sampler, source);
    const Lasso& x = xs[sampler.below(xs.size())];
    std::string at = " for " + format_compact_open(set) + " at " + lasso_text(*source, x);
    guarded(out, "kappa" + at, [&] {
      CompactOpen image = support_set(extend_pi(iso, set_to_idempotent(set, ring)));
      out.check(set.contains(x) == image.contains(kappa(x)), "membership differs" + at);
    });
  }
  return out;
}

PropertyResult check_kappa_support_law(const VerifiedIso& iso, std::uint64_t seed, std::size_t cases) {
  PropertyResult out = named("kappa-support-law");
  const GraphPtr& source = iso.spec().source;
  Sampler sampler(source, iso.spec().ring, seed);
  KappaCache kappa(iso);
  for (std::size_t i = 0; i < cases; ++i) {
    Element d = sampler.diagonal(3, 3);
    Element image = extend_pi(iso, d);
    for (std::size_t j = 0; j < 10; ++j) {
      Lasso x = sampler.lasso(5);
      if (!d.is_zero() && sampler.below(2) == 0) {
        auto it = d.terms().begin();
        std::advance(it, static_cast<long>(sampler.below(d.terms().size())));
        x = sampler.lasso_through(it->first.source_path, 3);
      }
      bool lhs = !evaluate_at_unit(d, x).is_zero();
      bool rhs = !evaluate_at_unit(image, kappa(x)).is_zero();
      out.check(lhs == rhs, "d = " + format_element(d) + " at " + lasso_text(*source, x));
    }
  }
  return out;
}

PropertyResult check_kappa_isolated(const VerifiedIso& iso) {
  PropertyResult out = named("kappa-isolated");
  const GraphPtr& source = iso.spec().source;
  const GraphPtr& target = iso.spec().target;
  Ring ring = iso.spec().ring;
  std::vector<IsolatedPoint> points = isolated_points(*source, 4);
  if (points.empty()) out.notes = "no isolated points";
  for (const IsolatedPoint& p : points) {
    std::string at = " at " + lasso_text(*source, p.point());
    guarded(out, "kappa" + at, [&] {
      Lasso y = induce_kappa(iso, p.point());
      auto q = IsolatedPoint::of(*target, y);
      out.check(q.has_value(), "kappa(x) = " + lasso_text(*target, y) + " is not isolated" + at);
      if (!q) return;
      Element image = extend_pi(iso, p.projection(source, ring));
      out.check(image == q->projection(target, ring),
                "pi(p_x) = " + format_element(image) + " is not p_kappa(x)" + at);
    });
  }
  return out;
}

PropertyResult check_kappa_domain(const VerifiedIso& iso, std::uint64_t seed, std::size_t normalizers) {
  PropertyResult out = named("kappa-domain");
  const GraphPtr& source = iso.spec().source;
  Sampler sampler(source, iso.spec().ring, seed);
  KappaCache kappa(iso);
  for (std::size_t i = 0; i < normalizers; ++i) {
    Element n = sampler.normalizer(3, 2);
    Element image = extend_pi(iso, n);
    std::vector<Path> dn = dom(n);
    std::vector<Path> dm = dom(image);
    for (std::size_t j = 0; j < 4; ++j) {
      Lasso x = sampler.lasso(5);
      if (sampler.below(2) == 0) {
        x = sampler.lasso_through(dn[sampler.below(dn.size())], 3);
      }
      out.check(in_union(x, dn) == in_union(kappa(x), dm),
                "n = " + format_element(n) + " at " + lasso_text(*source, x));
    }
  }
  return out;
}

PropertyResult check_kappa_equivariance(const VerifiedIso& iso, std::uint64_t seed, std::size_t cases) {
  PropertyResult out = named("kappa-equivariance");
  const GraphPtr& source = iso.spec().source;
  const Graph& target = *iso.spec().target;
  Sampler sampler(source, iso.spec().ring, seed);
  KappaCache kappa(iso);
  for (std::size_t i = 0; i < cases; ++i) {
    Lasso x = sampler.lasso(4);
    Element n = sampler.normalizer_at(x, 3, 2);
    std::string at = " for n = " + format_element(n) + " at " + lasso_text(*source, x);
    guarded(out, "equivariance" + at, [&] {
      Lasso lhs = kappa(alpha(n).apply(x));
      Lasso rhs = alpha(extend_pi(iso, n)).apply(kappa(x));
      out.check(lhs == rhs, "kappa(alpha_n x) = " + lasso_text(target, lhs) +
                                " but alpha_pi(n) kappa(x) = " + lasso_text(target, rhs) + at);
    });
  }
  return out;
}

// ---- isomorphisms ----------------------------------------------------------

PropertyResult check_extend_multiplicative(const VerifiedIso& iso, std::uint64_t seed, std::size_t pairs) {
  PropertyResult out = named("extend-multiplicative");
  Sampler sampler(iso.spec().source, iso.spec().ring, seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    Element f = sampler.element(3, 2);
    Element g = sampler.element(3, 2);
    Scalar r = sampler.scalar(3);
    std::string at = " for f = " + format_element(f) + ", g = " + format_element(g);
    out.check(extend_pi(iso, f * g) == extend_pi(iso, f) * extend_pi(iso, g), "pi(fg)" + at);
    out.check(extend_pi(iso, f + r * g) ==
                  extend_pi(iso, f) + r.twisted(iso.spec().twist) * extend_pi(iso, g),
              "pi(f + rg)" + at);
    out.check(extend_pi(iso, star(f)) == star(extend_pi(iso, f)), "pi(f*)" + at);
  }
  return out;
}

PropertyResult check_psi_homomorphism(const VerifiedIso& iso, std::uint64_t seed, std::size_t samples) {
  PropertyResult out = named("psi-homomorphism");
  const GraphPtr& source = iso.spec().source;
  Sampler sampler(source, iso.spec().ring, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Lasso x = sampler.lasso(4);
    Element n2 = sampler.normalizer_at(x, 2, 2);
    std::string at = " at " + lasso_text(*source, x) + " with " + format_element(n2);
    guarded(out, "psi" + at, [&] {
      WeylClass second = WeylClass::make(n2, x);
      WeylClass first = WeylClass::make(sampler.normalizer_at(second.image(), 2, 2), second.image());
      WeylClass lhs = psi(iso, weyl_compose(first, second));
      WeylClass rhs = weyl_compose(psi(iso, first), psi(iso, second));
      out.check(equivalent(lhs, rhs), "psi(ab) !~ psi(a) psi(b)" + at);
      out.check(equivalent(psi(iso, weyl_inverse(second)), weyl_inverse(psi(iso, second))),
                "psi(a^-1) !~ psi(a)^-1" + at);
    });
  }
  return out;
}

namespace {

bool same_tables(const GraphPtr& graph, Ring ring, const CylinderTable& a, const CylinderTable& b,
                 std::string& witness) {
  for (const auto& [c, cells] : a) {
    auto it = b.find(c);
    if (it == b.end() || indicator_sum(graph, ring, cells) != indicator_sum(graph, ring, it->second)) {
      witness = "tables differ at " + format_cylinder(*graph, c);
      return false;
    }
  }
  if (a.size() != b.size()) {
    witness = "tables have different sizes";
    return false;
  }
  return true;
}

}  // namespace

PropertyResult check_main_round_trip(const CorpusEntry& entry, std::uint64_t seed, std::size_t samples) {
  PropertyResult out = named(entry.name);
  const IsoSpec& spec = entry.spec;
  guarded(out, entry.name, [&] {
    VerifiedIso iso = VerifiedIso::verify(spec, 4);
    GroupoidIsoSpec omega = groupoid_iso_from_pi(iso, 3, samples, seed);
    out.check(true, "");

    IsoSpec back = pi_from_groupoid_iso(omega, spec.ring);
    ValidationReport report = validate_pi(back, 4);
    out.check(report.passed(), "recovered pi fails validation: " +
                                   (report.passed() ? std::string() : report.failures().front().witness));
    if (!report.passed()) return;

    GroupoidIsoSpec again = groupoid_iso_from_pi(VerifiedIso::verify(back, 4), 3, samples, seed);
    std::string witness;
    out.check(same_tables(spec.target, spec.ring, omega.forward, again.forward, witness),
              "forward round trip: " + witness);
    out.check(same_tables(spec.source, spec.ring, omega.backward, again.backward, witness),
              "backward round trip: " + witness);

    if (entry.relabel) {
      GroupoidIsoSpec direct = groupoid_iso_from_relabel(spec.source, spec.target, *entry.relabel, 3);
      out.check(same_tables(spec.target, spec.ring, omega.forward, direct.forward, witness),
                "table differs from the graph relabel: " + witness);
      ValidationReport relabelled = validate_pi(pi_from_groupoid_iso(direct, spec.ring), 4);
      out.check(relabelled.passed(), "pi from the graph relabel fails validation");
    }
  });
  return out;
}

PropertyResult check_negative_control(const CorpusEntry& entry) {
  PropertyResult out = named(entry.name);
  if (!entry.rejected_by) fail(ErrorKind::Invalid, entry.name + " is not a negative control");
  ValidationReport report = validate_pi(entry.spec, 4);
  out.check(!report.passed(), "validation passed");
  auto verdict = report.first_failure(*entry.rejected_by);
  out.check(verdict.has_value(), "no " + std::string(to_string(*entry.rejected_by)) + " failure");
  if (verdict) out.notes = verdict->witness;
  bool refused = false;
  try {
    VerifiedIso::verify(entry.spec, 4);
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::NotValidated;
  }
  out.check(refused, "verify did not throw NotValidated");
  return out;
}

// ---- oracle reductions -----------------------------------------------------

PropertyResult check_normalizer_bound(const GraphPtr& graph, Ring ring) {
  PropertyResult out = named("normalizer-bound");
  std::vector<Cylinder> cylinders = cylinders_up_to(*graph, 1);
  std::vector<Scalar> coefficients{Scalar::one(ring), Scalar(ring, 2)};
  if (ring == Ring::Gaussian) {
    coefficients.push_back(-Scalar::one(ring));
    coefficients.push_back(Scalar::i(ring));
  }
  std::size_t normalizers = 0;
  auto run = [&](const std::vector<std::pair<Cylinder, Scalar>>& terms) {
    Element n = Element::from_terms(graph, ring, terms);
    bool fast = is_normalizer(n);
    normalizers += fast ? 1 : 0;
    out.check(fast == normalizer_oracle(n, 3), "is_normalizer(" + format_element(n) + ") = " +
                                                   (fast ? "true" : "false") + " disagrees with the oracle");
  };
  for (std::size_t a = 0; a < cylinders.size(); ++a) {
    for (const Scalar& r : coefficients) {
      run({{cylinders[a], r}});
      for (std::size_t b = a + 1; b < cylinders.size(); ++b) {
        for (const Scalar& t : coefficients) run({{cylinders[a], r}, {cylinders[b], t}});
      }
    }
  }
  out.notes = std::to_string(normalizers) + " normalizers";
  return out;
}

PropertyResult check_germ_reduction(const GraphPtr& graph) {
  PropertyResult out = named("germ-reduction");
  const Graph& g = *graph;
  std::vector<Lasso> lassos = lassos_up_to(g, 8);
  std::vector<Cylinder> cylinders = cylinders_up_to(g, 2);
  std::size_t agreeing = 0;
  for (const Lasso& x : lassos_up_to(g, 3)) {
    if (IsolatedPoint::of(g, x)) continue;
    std::vector<Lasso> near;
    for (const Lasso& z : lassos) {
      if (z.starts_with(x.initial(g, 0))) near.push_back(z);
    }
    std::vector<RewriteRule> rules;
    for (const Cylinder& c : cylinders) {
      if (x.starts_with(c.source_path)) rules.push_back(RewriteRule{c.source_path, c.range_path});
    }
    for (std::size_t a = 0; a < rules.size(); ++a) {
      for (std::size_t b = a; b < rules.size(); ++b) {
        bool fast = germs_agree(g, rules[a], rules[b], x);
        agreeing += fast ? 1 : 0;
        out.check(fast == germ_oracle(g, rules[a], rules[b], x, near),
                  "germs at " + lasso_text(g, x) + " of " + format_path(g, rules[a].from) + " -> " +
                      format_path(g, rules[a].to) + " and " + format_path(g, rules[b].from) + " -> " +
                      format_path(g, rules[b].to));
      }
    }
  }
  out.notes = std::to_string(agreeing) + " agreeing pairs";
  return out;
}

// ---- suites ----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "action", "isolated", "weyl",
                                              "stone",   "iso",    "oracle",   "all"};
  return names;
}

namespace {

void run_one(const std::string& suite, const GraphPtr& graph, Ring ring, std::uint64_t seed,
             std::vector<PropertyResult>& out) {
  if (suite == "algebra") {
    out.push_back(check_leavitt_family(graph, ring));
    out.push_back(check_convolution(graph, ring, seed, 50, 20));
    out.push_back(check_ring_laws(graph, ring, seed, 100));
    out.push_back(check_grading(graph, ring, seed, 100));
    out.push_back(check_literal_round_trip(graph, ring, seed, 100));
  } else if (suite == "action") {
    out.push_back(check_support_isotropy(graph, ring, seed, 100, 10));
    out.push_back(check_conjugation_law(graph, ring, seed, 100));
    out.push_back(check_action_composition(graph, ring, seed, 50, 20));
  } else if (suite == "isolated") {
    out.push_back(check_compression_shape(graph, ring, seed, 50));
    out.push_back(check_compression_scalar(graph, ring, seed, 50));
    out.push_back(check_projection_intertwining(graph, ring, seed, 50));
  } else if (suite == "weyl") {
    out.push_back(check_weyl_equivalence(graph, ring, seed, 50));
    out.push_back(check_phi_homomorphism(graph, ring, seed, 100));
    out.push_back(check_phi_round_trips(graph, ring, seed, 100));
  } else if (suite == "stone") {
    VerifiedIso iso = VerifiedIso::verify(identity_spec(graph, ring), 4);
    out.push_back(check_boolean_laws(graph, seed, 200));
    out.push_back(check_rho_round_trip(graph, 6));
    out.push_back(check_kappa_iff(iso, paths_of_length(*graph, 4).size() <= 16 ? 4 : 3, 20, 50, seed));
    out.push_back(check_kappa_support_law(iso, seed, 20));
    out.push_back(check_kappa_isolated(iso));
    out.push_back(check_kappa_domain(iso, seed, 20));
    out.push_back(check_kappa_equivariance(iso, seed, 20));
  } else if (suite == "iso") {
    std::vector<PropertyResult> round_trips;
    std::vector<PropertyResult> controls;
    std::vector<PropertyResult> multiplicative;
    std::vector<PropertyResult> homomorphism;
    for (const CorpusEntry& entry : corpus()) {
      if (entry.rejected_by) {
        controls.push_back(check_negative_control(entry));
        continue;
      }
      round_trips.push_back(check_main_round_trip(entry, seed, 100));
      VerifiedIso iso = VerifiedIso::verify(entry.spec, 4);
      multiplicative.push_back(check_extend_multiplicative(iso, seed, 100));
      multiplicative.back().name = entry.name;
      homomorphism.push_back(check_psi_homomorphism(iso, seed, 50));
      homomorphism.back().name = entry.name;
    }
    out.push_back(merge("main-round-trip", round_trips));
    out.push_back(merge("negative-controls", controls));
    out.back().notes.clear();
    out.push_back(merge("extend-multiplicative", multiplicative));
    out.push_back(merge("psi-homomorphism", homomorphism));
  } else if (suite == "oracle") {
    out.push_back(check_normalizer_bound(graph, ring));
    out.push_back(check_germ_reduction(graph));
  } else {
    fail(ErrorKind::Invalid, "unknown suite '" + suite + "'");
  }
}

}  // namespace

std::vector<PropertyResult> run_suite(const std::string& suite, const GraphPtr& graph, Ring ring,
                                      std::uint64_t seed) {
  std::vector<PropertyResult> out;
  if (suite == "all") {
    for (const std::string& name : suite_names()) {
      if (name != "all") run_one(name, graph, ring, seed, out);
    }
  } else {
    run_one(suite, graph, ring, seed, out);
  }
  std::sort(out.begin(), out.end(),
            [](const PropertyResult& a, const PropertyResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace leavitt
