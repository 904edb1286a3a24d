#include "leavitt/harness.hpp"

#include <algorithm>

#include "leavitt/error.hpp"
#include "leavitt/sampling.hpp"
#include "leavitt/text.hpp"

namespace leavitt {

WeylClass psi(const VerifiedIso& iso, const WeylClass& c) {
  return WeylClass::trusted(extend_pi(iso, c.representative()), induce_kappa(iso, c.base()));
}

Arrow omega_via_pi(const VerifiedIso& iso, const Arrow& arrow) {
  const IsoSpec& spec = iso.spec();
  return phi_inverse(psi(iso, phi(spec.source, spec.ring, arrow)));
}

void validate_relabel(const Graph& source, const Graph& target, const GraphRelabel& relabel) {
  if (relabel.vertex.size() != source.vertex_count() || relabel.edge.size() != source.edge_count() ||
      source.vertex_count() != target.vertex_count() || source.edge_count() != target.edge_count()) {
    fail(ErrorKind::Invalid, "relabel sizes do not match the graphs");
  }
  std::vector<bool> hit_v(target.vertex_count());
  std::vector<bool> hit_e(target.edge_count());
  for (VertexId v : relabel.vertex) {
    if (v >= target.vertex_count() || hit_v[v]) fail(ErrorKind::Invalid, "relabel is not a bijection on vertices");
    hit_v[v] = true;
  }
  for (EdgeId e = 0; e < source.edge_count(); ++e) {
    EdgeId f = relabel.edge[e];
    if (f >= target.edge_count() || hit_e[f]) fail(ErrorKind::Invalid, "relabel is not a bijection on edges");
    hit_e[f] = true;
    if (target.range(f) != relabel.vertex[source.range(e)] ||
        target.source(f) != relabel.vertex[source.source(e)]) {
      fail(ErrorKind::Invalid, "relabel of edge " + source.edge_name(e) + " breaks range or source");
    }
  }
}

namespace {

std::vector<EdgeId> relabel_edges(const GraphRelabel& relabel, const std::vector<EdgeId>& edges) {
  std::vector<EdgeId> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back(relabel.edge.at(e));
  return out;
}

}  // namespace

GraphRelabel inverse_relabel(const GraphRelabel& relabel) {
  GraphRelabel out{std::vector<VertexId>(relabel.vertex.size()),
                   std::vector<EdgeId>(relabel.edge.size())};
  for (VertexId v = 0; v < relabel.vertex.size(); ++v) out.vertex[relabel.vertex[v]] = v;
  for (EdgeId e = 0; e < relabel.edge.size(); ++e) out.edge[relabel.edge[e]] = e;
  return out;
}

Path relabel_path(const Graph& target, const GraphRelabel& relabel, const Path& path) {
  if (path.is_vertex()) return Path::vertex(relabel.vertex.at(path.range()));
  return Path::from_edges(target, relabel_edges(relabel, path.edges()));
}

Lasso relabel_lasso(const Graph& target, const GraphRelabel& relabel, const Lasso& x) {
  return Lasso::make(target, relabel_edges(relabel, x.prefix()), relabel_edges(relabel, x.cycle()));
}

std::vector<Cylinder> cylinders_up_to(const Graph& graph, std::size_t depth) {
  std::vector<Path> paths = paths_up_to(graph, depth);
  std::vector<Cylinder> out;
  for (const Path& nu : paths) {
    for (const Path& mu : paths) {
      if (mu.source() == nu.source()) out.push_back(Cylinder{mu, nu});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupoidIsoSpec groupoid_iso_from_relabel(GraphPtr source, GraphPtr target, GraphRelabel relabel,
                                          std::size_t depth) {
  validate_relabel(*source, *target, relabel);
  GroupoidIsoSpec out;
  out.source = std::move(source);
  out.target = std::move(target);
  out.depth = depth;
  GraphRelabel back = inverse_relabel(relabel);
  for (const Cylinder& c : cylinders_up_to(*out.source, depth)) {
    out.forward[c] = {Cylinder{relabel_path(*out.target, relabel, c.range_path),
                               relabel_path(*out.target, relabel, c.source_path)}};
  }
  for (const Cylinder& c : cylinders_up_to(*out.target, depth)) {
    out.backward[c] = {Cylinder{relabel_path(*out.source, back, c.range_path),
                                relabel_path(*out.source, back, c.source_path)}};
  }
  out.relabel = std::move(relabel);
  return out;
}

namespace {

const std::vector<Cylinder>& table_entry(const CylinderTable& table, const Graph& graph,
                                         const Cylinder& c) {
  auto it = table.find(c);
  if (it == table.end()) {
    fail(ErrorKind::Invalid, "cylinder table has no entry for " + format_cylinder(graph, c));
  }
  return it->second;
}

Lasso table_unit_image(const Graph& from, const Graph& to, const CylinderTable& table,
                       std::size_t depth, const Lasso& y) {
  const std::size_t stem = y.prefix().size();
  const std::size_t loop = stem + y.cycle().size();
  if (loop > depth) {
    fail(ErrorKind::Invalid, "cylinder table of depth " + std::to_string(depth) +
                                 " is too shallow for " + format_lasso(from, y));
  }
  std::vector<Lasso> candidates;
  std::vector<Path> fixed_regions;
  for (const Cylinder& c : table_entry(table, from, Cylinder{y.initial(from, loop), y.initial(from, stem)})) {
    RewriteRule rule{c.source_path, c.range_path};
    if (rule.from == rule.to) {
      fixed_regions.push_back(rule.from);
    } else if (auto point = fixed_point(to, rule)) {
      if (std::find(candidates.begin(), candidates.end(), *point) == candidates.end()) {
        candidates.push_back(*point);
      }
    }
  }
  for (std::size_t m = 1; m <= depth; ++m) {
    if (candidates.size() == 1 && fixed_regions.empty()) break;
    std::vector<Path> support;
    for (const Cylinder& c : table_entry(table, from, unit_cylinder(y.initial(from, m)))) {
      support.push_back(c.range_path);
    }
    std::erase_if(candidates, [&](const Lasso& c) { return !in_union(c, support); });
    std::erase_if(fixed_regions, [&](const Path& region) {
      return std::none_of(support.begin(), support.end(), [&](const Path& p) {
        return is_prefix(p, region) || is_prefix(region, p);
      });
    });
  }
  if (candidates.size() != 1 || !fixed_regions.empty()) {
    fail(ErrorKind::Invalid, "cylinder table does not determine the image of " + format_lasso(from, y));
  }
  return candidates.front();
}

Arrow table_evaluate(const Graph& from, const Graph& to, const CylinderTable& table,
                     std::size_t depth, const Arrow& arrow) {
  Cylinder c = minimal_cylinder(from, arrow);
  if (c.range_path.length() > depth || c.source_path.length() > depth) {
    fail(ErrorKind::Invalid, "cylinder table of depth " + std::to_string(depth) +
                                 " is too shallow for " + format_arrow(from, arrow));
  }
  Lasso y = table_unit_image(from, to, table, depth, arrow.source);
  for (const Cylinder& image : table_entry(table, from, c)) {
    if (y.starts_with(image.source_path)) return arrow_at_source(to, image, y);
  }
  fail(ErrorKind::Invalid, "image of " + format_cylinder(from, c) + " misses the image of its source");
}

Arrow relabel_evaluate(const Graph& to, const GraphRelabel& relabel, const Arrow& arrow) {
  return Arrow{relabel_lasso(to, relabel, arrow.range), arrow.lag,
               relabel_lasso(to, relabel, arrow.source)};
}

}  // namespace

Arrow evaluate_groupoid_iso(const GroupoidIsoSpec& spec, const Arrow& arrow) {
  if (spec.evaluator) return spec.evaluator(arrow);
  if (spec.relabel) return relabel_evaluate(*spec.target, *spec.relabel, arrow);
  return table_evaluate(*spec.source, *spec.target, spec.forward, spec.depth, arrow);
}

Arrow evaluate_groupoid_iso_inverse(const GroupoidIsoSpec& spec, const Arrow& arrow) {
  if (spec.inverse_evaluator) return spec.inverse_evaluator(arrow);
  if (spec.relabel) return relabel_evaluate(*spec.source, inverse_relabel(*spec.relabel), arrow);
  return table_evaluate(*spec.target, *spec.source, spec.backward, spec.depth, arrow);
}

HomomorphismReport check_groupoid_iso(const GraphPtr& graph, const ArrowMap& map, const ArrowMap& back,
                                      std::size_t samples, std::uint64_t seed) {
  const Graph& g = *graph;
  Sampler sampler(graph, Ring::Integer, seed);
  HomomorphismReport report;
  auto note = [&](const std::string& what) {
    if (report.failures++ == 0) report.first_failure = what;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    ++report.samples;
    Arrow h = sampler.arrow(4, 2);
    Arrow first = sampler.arrow_with_source(h.range, 2);
    try {
      Arrow product = compose(first, h);
      Arrow image_first = map(first);
      Arrow image_h = map(h);
      if (map(product) != compose(image_first, image_h)) {
        note("composition fails at " + format_arrow(g, first) + " " + format_arrow(g, h));
      } else if (map(invert(first)) != invert(image_first)) {
        note("inverse fails at " + format_arrow(g, first));
      } else if (back(image_first) != first) {
        note("inverse map does not undo " + format_arrow(g, first));
      }
    } catch (const Error& e) {
      note(format_arrow(g, first) + " " + format_arrow(g, h) + ": " + e.what());
    }
  }
  return report;
}

std::size_t table_reach(const Graph& graph, const Arrow& arrow) {
  Cylinder c = minimal_cylinder(graph, arrow);
  return std::max({arrow.source.description_size(), c.range_path.length(), c.source_path.length()});
}

Element indicator_sum(const GraphPtr& graph, Ring ring, const std::vector<Cylinder>& cylinders) {
  std::vector<std::pair<Cylinder, Scalar>> terms;
  for (const Cylinder& c : cylinders) terms.emplace_back(c, Scalar::one(ring));
  return Element::from_terms(graph, ring, terms);
}

namespace {

std::vector<Cylinder> support_cylinders(const Element& f) {
  std::vector<Cylinder> out;
  for (const auto& [c, r] : f.terms()) out.push_back(c);
  return out;
}

}  // namespace

GroupoidIsoSpec groupoid_iso_from_pi(const VerifiedIso& iso, std::size_t depth,
                                     std::size_t samples, std::uint64_t seed) {
  const IsoSpec& spec = iso.spec();
  VerifiedIso inverse = iso.inverse();
  GroupoidIsoSpec out;
  out.source = spec.source;
  out.target = spec.target;
  out.depth = depth;
  for (const Cylinder& c : cylinders_up_to(*spec.source, depth)) {
    out.forward[c] = support_cylinders(extend_pi(iso, Element::indicator(spec.source, spec.ring, c)));
  }
  for (const Cylinder& c : cylinders_up_to(*spec.target, depth)) {
    out.backward[c] =
        support_cylinders(extend_pi(inverse, Element::indicator(spec.target, spec.ring, c)));
  }
  out.evaluator = [iso](const Arrow& a) { return omega_via_pi(iso, a); };
  out.inverse_evaluator = [inverse](const Arrow& a) { return omega_via_pi(inverse, a); };

  HomomorphismReport report =
      check_groupoid_iso(spec.source, out.evaluator, out.inverse_evaluator, samples, seed);
  if (!report.passed()) fail(ErrorKind::NotAHomomorphism, report.first_failure);

  const Graph& g = *spec.source;
  Sampler sampler(spec.source, spec.ring, seed + 1);
  for (std::size_t i = 0; i < samples; ++i) {
    Arrow a = sampler.arrow(depth, 1);
    if (table_reach(g, a) > depth) continue;
    Arrow from_table = table_evaluate(g, *spec.target, out.forward, depth, a);
    if (from_table != out.evaluator(a)) {
      fail(ErrorKind::NotAHomomorphism, "cylinder table and evaluator disagree at " + format_arrow(g, a));
    }
  }
  return out;
}

namespace {

std::string omega_label(const Graph& graph, const Cylinder& c) {
  return "Omega(Z" + format_cylinder(graph, c) + ")";
}

void check_table(const GraphPtr& from, const GraphPtr& to, const CylinderTable& table,
                 const CylinderTable& back, std::size_t depth, Ring ring) {
  const Graph& g = *from;
  std::vector<Cylinder> small;
  for (const Cylinder& c : cylinders_up_to(g, std::min<std::size_t>(depth, 2))) {
    if (!table.contains(c)) fail(ErrorKind::Invalid, "cylinder table lacks " + format_cylinder(g, c));
    small.push_back(c);
  }
  auto image = [&](const Cylinder& c) { return indicator_sum(to, ring, table.at(c)); };
  for (const Cylinder& c : small) {
    Cylinder flipped{c.source_path, c.range_path};
    if (!(image(flipped) == star(image(c)))) {
      fail(ErrorKind::NotAHomomorphism, omega_label(g, flipped) + " is not the inverse of " + omega_label(g, c));
    }
    Element undone(from, ring);
    for (const Cylinder& piece : table.at(c)) {
      auto it = back.find(piece);
      if (it == back.end()) {
        fail(ErrorKind::Invalid, "inverse table lacks " + format_cylinder(*to, piece));
      }
      undone = undone + indicator_sum(from, ring, it->second);
    }
    if (!(undone == Element::indicator(from, ring, c))) {
      fail(ErrorKind::NotAHomomorphism, "inverse table does not undo " + omega_label(g, c));
    }
  }
  for (const Cylinder& left : small) {
    Element image_left = image(left);
    for (const Cylinder& right : small) {
      Element product = image_left * image(right);
      auto c = cylinder_product(g, left, right);
      if (!c) {
        if (!product.is_zero()) {
          fail(ErrorKind::NotAHomomorphism, omega_label(g, left) + " " + omega_label(g, right) +
                                                " should be empty");
        }
      } else if (auto it = table.find(*c); it != table.end()) {
        if (!(product == indicator_sum(to, ring, it->second))) {
          fail(ErrorKind::NotAHomomorphism, omega_label(g, left) + " " + omega_label(g, right) +
                                                " differs from " + omega_label(g, *c));
        }
      }
    }
  }
}

GeneratorImages images_from_table(const Graph& from, const GraphPtr& to, const CylinderTable& table,
                                  Ring ring) {
  GeneratorImages out;
  auto entry = [&](const Cylinder& c) { return indicator_sum(to, ring, table_entry(table, from, c)); };
  for (VertexId v = 0; v < from.vertex_count(); ++v) {
    out.vertex.emplace(v, entry(unit_cylinder(Path::vertex(v))));
  }
  for (EdgeId e = 0; e < from.edge_count(); ++e) {
    Path edge = Path::edge(from, e);
    Path base = Path::vertex(from.source(e));
    out.edge.emplace(e, entry(Cylinder{edge, base}));
    out.ghost.emplace(e, entry(Cylinder{base, edge}));
  }
  return out;
}

}  // namespace

IsoSpec pi_from_groupoid_iso(const GroupoidIsoSpec& spec, Ring ring) {
  if (spec.depth < 1) fail(ErrorKind::Invalid, "cylinder table needs depth at least 1");
  check_table(spec.source, spec.target, spec.forward, spec.backward, spec.depth, ring);
  check_table(spec.target, spec.source, spec.backward, spec.forward, spec.depth, ring);
  IsoSpec out;
  out.source = spec.source;
  out.target = spec.target;
  out.ring = ring;
  out.twist = Twist::Identity;
  out.forward = images_from_table(*spec.source, spec.target, spec.forward, ring);
  out.backward = images_from_table(*spec.target, spec.source, spec.backward, ring);
  return out;
}

}  // namespace leavitt
