#include "leavitt/stone.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "leavitt/action.hpp"
#include "leavitt/error.hpp"
#include "leavitt/text.hpp"

namespace leavitt {

CompactOpen CompactOpen::make(GraphPtr graph, const std::vector<Path>& prefixes) {
  const Graph& g = *graph;
  std::size_t depth = 0;
  for (const Path& p : prefixes) depth = std::max(depth, p.length());
  std::set<Path> cells;
  for (const Path& p : prefixes) {
    for (Path& ext : extensions(g, p, depth - p.length())) cells.insert(std::move(ext));
  }
  // Merge complete sibling sets bottom-up.
  for (std::size_t level = depth; level > 0; --level) {
    std::map<Path, std::size_t> children;
    for (const Path& p : cells) {
      if (p.length() == level) ++children[take(g, p, level - 1)];
    }
    for (const auto& [parent, count] : children) {
      if (count != g.range_edges(parent.source()).size()) continue;
      for (const Path& child : extensions(g, parent, 1)) cells.erase(child);
      cells.insert(parent);
    }
  }
  return CompactOpen(std::move(graph), std::vector<Path>(cells.begin(), cells.end()));
}

CompactOpen CompactOpen::whole(GraphPtr graph) {
  std::vector<Path> vertices;
  for (VertexId v = 0; v < graph->vertex_count(); ++v) vertices.push_back(Path::vertex(v));
  return make(std::move(graph), vertices);
}

bool CompactOpen::contains(const Lasso& x) const { return in_union(x, prefixes_); }

std::size_t CompactOpen::depth() const {
  std::size_t depth = 0;
  for (const Path& p : prefixes_) depth = std::max(depth, p.length());
  return depth;
}

std::vector<Path> CompactOpen::expanded(std::size_t length) const {
  if (length < depth()) fail(ErrorKind::Invalid, "expansion shallower than the set");
  std::vector<Path> out;
  for (const Path& p : prefixes_) {
    for (Path& ext : extensions(*graph_, p, length - p.length())) out.push_back(std::move(ext));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_same_graph(const CompactOpen& a, const CompactOpen& b) {
  if (a.graph_ptr() != b.graph_ptr()) fail(ErrorKind::Invalid, "compact opens over different graphs");
}

template <class Op>
CompactOpen combine(const CompactOpen& a, const CompactOpen& b, Op op) {
  require_same_graph(a, b);
  std::size_t depth = std::max(a.depth(), b.depth());
  std::vector<Path> left = a.expanded(depth);
  std::vector<Path> right = b.expanded(depth);
  std::vector<Path> out;
  op(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(out));
  return CompactOpen::make(a.graph_ptr(), out);
}

}  // namespace

CompactOpen meet(const CompactOpen& a, const CompactOpen& b) {
  return combine(a, b, [](auto... args) { return std::set_intersection(args...); });
}

CompactOpen join(const CompactOpen& a, const CompactOpen& b) {
  return combine(a, b, [](auto... args) { return std::set_union(args...); });
}

CompactOpen difference(const CompactOpen& a, const CompactOpen& b) {
  return combine(a, b, [](auto... args) { return std::set_difference(args...); });
}

bool leq(const CompactOpen& a, const CompactOpen& b) { return meet(a, b) == a; }

std::string format_compact_open(const CompactOpen& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.prefixes().size(); ++i) {
    if (i > 0) out += ", ";
    out += format_path(set.graph(), set.prefixes()[i]);
  }
  return out + "}";
}

CompactOpen parse_compact_open(const GraphPtr& graph, std::string_view text) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    fail(ErrorKind::Parse, "compact open must be written {p1, p2, ...}");
  }
  body = trim(std::string_view(body).substr(1, body.size() - 2));
  std::vector<Path> prefixes;
  std::size_t start = 0;
  while (!body.empty() && start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::size_t end = comma == std::string::npos ? body.size() : comma;
    prefixes.push_back(parse_path(*graph, trim(std::string_view(body).substr(start, end - start))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return CompactOpen::make(graph, prefixes);
}

CompactOpen support_set(const Element& d) { return CompactOpen::make(d.graph_ptr(), support_units(d)); }

CompactOpen idempotent_to_set(const Element& d) {
  if (!is_diagonal(d) || !(d * d == d) || !(star(d) == d)) {
    fail(ErrorKind::NotIdempotent, format_element(d) + " is not a diagonal projection");
  }
  return support_set(d);
}

Element set_to_idempotent(const CompactOpen& set, Ring ring) {
  std::vector<std::pair<Cylinder, Scalar>> terms;
  for (const Path& p : set.prefixes()) terms.emplace_back(unit_cylinder(p), Scalar::one(ring));
  return Element::from_terms(set.graph_ptr(), ring, terms);
}

CompactOpen FilterChain::basis(std::size_t m) const {
  return CompactOpen::make(graph_, {point_.initial(*graph_, m)});
}

std::size_t kappa_cap(const Graph& graph, const Lasso& x) {
  return 4 * (graph.vertex_count() + graph.edge_count() + x.description_size());
}

Lasso induce_kappa(const VerifiedIso& iso, const Lasso& x, std::optional<std::size_t> cap) {
  const IsoSpec& spec = iso.spec();
  const Graph& source = *spec.source;
  const Graph& target = *spec.target;
  const std::size_t limit = cap.value_or(kappa_cap(source, x));
  const std::size_t stem = x.prefix().size();
  const std::size_t loop = stem + x.cycle().size();

  Element n = Element::indicator(spec.source, spec.ring,
                                 Cylinder{x.initial(source, loop), x.initial(source, stem)});
  PartialMap image = rewrite_rules(extend_pi(iso, n));
  std::vector<Lasso> candidates;
  std::vector<Path> fixed_regions;
  for (const RewriteRule& rule : image.rules()) {
    if (rule.from == rule.to) {
      fixed_regions.push_back(rule.from);
    } else if (auto point = fixed_point(target, rule)) {
      if (std::find(candidates.begin(), candidates.end(), *point) == candidates.end()) {
        candidates.push_back(*point);
      }
    }
  }

  for (std::size_t m = 1; m <= limit; ++m) {
    Element basic = Element::indicator(spec.source, spec.ring, unit_cylinder(x.initial(source, m)));
    std::vector<Path> support = support_units(extend_pi(iso, basic));
    if (support.size() == 1 && is_singleton_cylinder(target, support.front())) {
      return first_continuation(target, support.front());
    }
    std::erase_if(candidates, [&](const Lasso& c) { return !in_union(c, support); });
    std::erase_if(fixed_regions, [&](const Path& region) {
      return std::none_of(support.begin(), support.end(), [&](const Path& p) {
        return is_prefix(p, region) || is_prefix(region, p);
      });
    });
    if (candidates.empty() && fixed_regions.empty()) {
      fail(ErrorKind::NoStabilization,
           "no fixed point of the image action survives at depth " + std::to_string(m));
    }
    if (candidates.size() == 1 && fixed_regions.empty() && m >= loop) return candidates.front();
  }
  fail(ErrorKind::NoStabilization,
       "image filter chain did not settle within " + std::to_string(limit) + " steps");
}

LinearityCheck check_kappa_linearity(const VerifiedIso& iso, std::size_t depth, std::uint64_t seed) {
  const IsoSpec& spec = iso.spec();
  const Graph& g = *spec.source;
  const Ring ring = spec.ring;
  const Scalar unit = ring == Ring::Gaussian ? Scalar::i(ring) : Scalar(ring, 2);

  std::vector<Element> probes;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    probes.push_back(unit * Element::vertex_unit(spec.source, ring, v));
  }
  std::mt19937_64 rng(seed);
  std::vector<Path> paths = paths_up_to(g, depth);
  std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> count(1, 3);
  for (int i = 0; i < 12; ++i) {
    std::vector<std::pair<Cylinder, Scalar>> terms;
    for (int k = count(rng); k > 0; --k) {
      int re = coeff(rng);
      int im = ring == Ring::Gaussian ? coeff(rng) : 0;
      terms.emplace_back(unit_cylinder(paths[pick(rng)]), Scalar(ring, re, im));
    }
    probes.push_back(Element::from_terms(spec.source, ring, terms));
  }

  std::vector<std::pair<Lasso, Lasso>> points;
  for (const Lasso& x : lassos_up_to(g, depth)) points.emplace_back(x, induce_kappa(iso, x));

  for (const Element& d : probes) {
    Element image = extend_pi(iso, d);
    for (const auto& [x, y] : points) {
      Scalar lhs = evaluate_at_unit(image, y);
      Scalar rhs = evaluate_at_unit(d, x);
      if (!(lhs == rhs)) {
        return LinearityCheck{false, "d = " + format_element(d) + ", x = " + format_lasso(g, x) +
                                         ": pi(d)(kappa(x)) = " + lhs.to_string() +
                                         ", d(x) = " + rhs.to_string()};
      }
    }
  }
  return LinearityCheck{};
}

}  // namespace leavitt
