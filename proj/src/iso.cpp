#include "leavitt/iso.hpp"

#include "leavitt/error.hpp"
#include "leavitt/text.hpp"

namespace leavitt {

IsoSpec IsoSpec::inverted() const {
  IsoSpec out;
  out.source = target;
  out.target = source;
  out.ring = ring;
  out.twist = twist;
  out.forward = backward;
  out.backward = forward;
  return out;
}

namespace {

class ImageBuilder {
 public:
  ImageBuilder(const Graph& domain, const GraphPtr& codomain, Ring ring,
               const GeneratorImages& images)
      : domain_(domain), codomain_(codomain), ring_(ring), images_(images) {}

  // pi(s_mu) = S_{mu_1} ... S_{mu_n}.
  Element forward_path(const Path& mu) {
    if (mu.is_vertex()) return vertex(mu.range());
    Element out = edge(mu.edges().front());
    for (std::size_t i = 1; i < mu.length(); ++i) out = out * edge(mu.edges()[i]);
    return out;
  }

  // pi(s_nu^*) = T_{nu_n} ... T_{nu_1}.
  Element ghost_path(const Path& nu) {
    if (nu.is_vertex()) return vertex(nu.range());
    Element out = ghost(nu.edges().back());
    for (std::size_t i = nu.length() - 1; i-- > 0;) out = out * ghost(nu.edges()[i]);
    return out;
  }

  Element vertex(VertexId v) const { return lookup(images_.vertex, v, "p_" + domain_.vertex_name(v)); }
  Element edge(EdgeId e) const { return lookup(images_.edge, e, "s_" + domain_.edge_name(e)); }
  Element ghost(EdgeId e) const {
    return lookup(images_.ghost, e, "s_" + domain_.edge_name(e) + "^*");
  }

 private:
  template <class Key>
  Element lookup(const std::map<Key, Element>& table, Key key, const std::string& label) const {
    auto it = table.find(key);
    if (it == table.end()) fail(ErrorKind::Invalid, "no image for " + label);
    if (it->second.graph_ptr() != codomain_) fail(ErrorKind::Invalid, "image of " + label + " over the wrong graph");
    require_same_ring(it->second.ring(), ring_);
    return it->second;
  }

  const Graph& domain_;
  const GraphPtr& codomain_;
  Ring ring_;
  const GeneratorImages& images_;
};

}  // namespace

Element apply_images(const Graph& domain, const GraphPtr& codomain, Ring ring, Twist twist,
                     const GeneratorImages& images, const Element& f) {
  require_same_ring(f.ring(), ring);
  ImageBuilder builder(domain, codomain, ring, images);
  std::map<Path, Element> forward;
  std::map<Path, Element> ghost;
  Element out(codomain, ring);
  for (const auto& [cyl, coeff] : f.terms()) {
    auto fit = forward.find(cyl.range_path);
    if (fit == forward.end()) {
      fit = forward.emplace(cyl.range_path, builder.forward_path(cyl.range_path)).first;
    }
    auto git = ghost.find(cyl.source_path);
    if (git == ghost.end()) {
      git = ghost.emplace(cyl.source_path, builder.ghost_path(cyl.source_path)).first;
    }
    out = out + coeff.twisted(twist) * (fit->second * git->second);
  }
  return out;
}

std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Completeness: return "completeness";
    case CheckKind::VertexIdempotent: return "vertex-idempotent";
    case CheckKind::VertexOrthogonal: return "vertex-orthogonal";
    case CheckKind::L1: return "L1";
    case CheckKind::L2: return "L2";
    case CheckKind::L3: return "L3";
    case CheckKind::L4: return "L4";
    case CheckKind::Star: return "star";
    case CheckKind::Diagonal: return "diagonal";
    case CheckKind::Composite: return "composite";
  }
  return "?";
}

bool ValidationReport::passed() const {
  for (const Verdict& v : verdicts) {
    if (!v.passed) return false;
  }
  return true;
}

std::vector<Verdict> ValidationReport::failures() const {
  std::vector<Verdict> out;
  for (const Verdict& v : verdicts) {
    if (!v.passed) out.push_back(v);
  }
  return out;
}

std::optional<Verdict> ValidationReport::first_failure(CheckKind kind) const {
  for (const Verdict& v : verdicts) {
    if (v.kind == kind && !v.passed) return v;
  }
  return std::nullopt;
}

namespace {

struct DirectionCheck {
  ValidationReport& report;
  std::string direction;
  std::string pi;  // "pi" or "pi^-1", for witnesses

  void expect_equal(CheckKind kind, const std::string& subject, const Element& got,
                    const Element& expected) {
    Verdict v{kind, direction, subject, true, {}};
    if (!(got == expected)) {
      v.passed = false;
      v.witness = subject + " = " + format_element(got) + ", expected " + format_element(expected);
    }
    report.verdicts.push_back(std::move(v));
  }
};

bool images_complete(DirectionCheck& check, const Graph& domain, const GraphPtr& codomain,
                     Ring ring, const GeneratorImages& images) {
  bool ok = true;
  auto note = [&](const std::string& label, const std::map<std::uint32_t, Element>& table,
                  std::uint32_t key) {
    Verdict v{CheckKind::Completeness, check.direction, label, true, {}};
    auto it = table.find(key);
    if (it == table.end()) {
      v.passed = false;
      v.witness = "no image for " + label;
    } else if (it->second.graph_ptr() != codomain) {
      v.passed = false;
      v.witness = "image of " + label + " lives over another graph";
    } else if (it->second.ring() != ring) {
      v.passed = false;
      v.witness = "image of " + label + " has coefficients in " +
                  std::string(to_string(it->second.ring()));
    }
    ok = ok && v.passed;
    check.report.verdicts.push_back(std::move(v));
  };
  for (VertexId v = 0; v < domain.vertex_count(); ++v) {
    note("p_" + domain.vertex_name(v), images.vertex, v);
  }
  for (EdgeId e = 0; e < domain.edge_count(); ++e) {
    note("s_" + domain.edge_name(e), images.edge, e);
    note("s_" + domain.edge_name(e) + "^*", images.ghost, e);
  }
  return ok;
}

void check_relations(DirectionCheck& check, const GraphPtr& domain_ptr, const GraphPtr& codomain,
                     Ring ring, Twist twist, const GeneratorImages& images, std::size_t depth) {
  const Graph& domain = *domain_ptr;
  const std::string& pi = check.pi;
  auto p = [&](VertexId v) { return images.vertex.at(v); };
  auto s = [&](EdgeId e) { return images.edge.at(e); };
  auto t = [&](EdgeId e) { return images.ghost.at(e); };
  auto pn = [&](VertexId v) { return pi + "(p_" + domain.vertex_name(v) + ")"; };
  auto sn = [&](EdgeId e) { return pi + "(s_" + domain.edge_name(e) + ")"; };
  auto tn = [&](EdgeId e) { return pi + "(s_" + domain.edge_name(e) + "^*)"; };
  const Element zero(codomain, ring);

  for (VertexId v = 0; v < domain.vertex_count(); ++v) {
    check.expect_equal(CheckKind::VertexIdempotent, pn(v) + "^2", p(v) * p(v), p(v));
    check.expect_equal(CheckKind::VertexIdempotent, pn(v) + "^*", star(p(v)), p(v));
    for (VertexId w = 0; w < domain.vertex_count(); ++w) {
      if (w == v) continue;
      check.expect_equal(CheckKind::VertexOrthogonal, pn(v) + " " + pn(w), p(v) * p(w), zero);
    }
  }
  for (EdgeId e = 0; e < domain.edge_count(); ++e) {
    VertexId r = domain.range(e);
    VertexId src = domain.source(e);
    check.expect_equal(CheckKind::L1, pn(r) + " " + sn(e), p(r) * s(e), s(e));
    check.expect_equal(CheckKind::L1, sn(e) + " " + pn(src), s(e) * p(src), s(e));
    check.expect_equal(CheckKind::L2, pn(src) + " " + tn(e), p(src) * t(e), t(e));
    check.expect_equal(CheckKind::L2, tn(e) + " " + pn(r), t(e) * p(r), t(e));
    for (EdgeId f = 0; f < domain.edge_count(); ++f) {
      check.expect_equal(CheckKind::L3, tn(e) + " " + sn(f), t(e) * s(f), e == f ? p(src) : zero);
    }
    check.expect_equal(CheckKind::Star, tn(e), t(e), star(s(e)));
  }
  for (VertexId v = 0; v < domain.vertex_count(); ++v) {
    Element sum = zero;
    for (EdgeId e : domain.range_edges(v)) sum = sum + s(e) * t(e);
    check.expect_equal(CheckKind::L4, "sum over r^-1(" + domain.vertex_name(v) + ") of " + pi + "(s_e s_e^*)",
                       sum, p(v));
  }
  for (const Path& mu : paths_up_to(domain, depth)) {
    Element image = apply_images(domain, codomain, ring, twist, images,
                                 Element::indicator(domain_ptr, ring, unit_cylinder(mu)));
    Verdict v{CheckKind::Diagonal, check.direction, pi + "(1_Z(" + format_path(domain, mu) + "))",
              true, {}};
    if (!is_diagonal(image)) {
      v.passed = false;
      v.witness = v.subject + " = " + format_element(image) + " is not diagonal";
    }
    check.report.verdicts.push_back(std::move(v));
  }
}

// Generators of `domain`, each with a label for witnesses.
std::vector<std::pair<std::string, Element>> generators(const GraphPtr& domain, Ring ring) {
  const Graph& g = *domain;
  std::vector<std::pair<std::string, Element>> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.emplace_back("p_" + g.vertex_name(v), Element::vertex_unit(domain, ring, v));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Path path = Path::edge(g, e);
    out.emplace_back("s_" + g.edge_name(e), Element::path_generator(domain, ring, path));
    out.emplace_back("s_" + g.edge_name(e) + "^*", Element::ghost_generator(domain, ring, path));
  }
  return out;
}

void check_composite(ValidationReport& report, const std::string& direction,
                     const std::string& label, const GraphPtr& domain, const GraphPtr& codomain,
                     Ring ring, Twist twist, const GeneratorImages& there,
                     const GeneratorImages& back) {
  for (const auto& [name, gen] : generators(domain, ring)) {
    Element image = apply_images(*domain, codomain, ring, twist, there, gen);
    Element round = apply_images(*codomain, domain, ring, twist, back, image);
    Verdict v{CheckKind::Composite, direction, label + "(" + name + ")", true, {}};
    if (!(round == gen)) {
      v.passed = false;
      v.witness = v.subject + " = " + format_element(round) + ", expected " + format_element(gen);
    }
    report.verdicts.push_back(std::move(v));
  }
}

}  // namespace

ValidationReport validate_pi(const IsoSpec& spec, std::size_t depth) {
  if (!spec.source || !spec.target) fail(ErrorKind::Invalid, "iso spec without graphs");
  ValidationReport report;
  DirectionCheck forward{report, "forward", "pi"};
  DirectionCheck inverse{report, "inverse", "pi^-1"};
  bool fwd_ok = images_complete(forward, *spec.source, spec.target, spec.ring, spec.forward);
  bool inv_ok = images_complete(inverse, *spec.target, spec.source, spec.ring, spec.backward);
  if (fwd_ok) {
    check_relations(forward, spec.source, spec.target, spec.ring, spec.twist, spec.forward, depth);
  }
  if (inv_ok) {
    check_relations(inverse, spec.target, spec.source, spec.ring, spec.twist, spec.backward, depth);
  }
  if (fwd_ok && inv_ok) {
    check_composite(report, "forward", "pi^-1 pi", spec.source, spec.target, spec.ring, spec.twist,
                    spec.forward, spec.backward);
    check_composite(report, "inverse", "pi pi^-1", spec.target, spec.source, spec.ring, spec.twist,
                    spec.backward, spec.forward);
  }
  return report;
}

VerifiedIso VerifiedIso::verify(IsoSpec spec, std::size_t depth) {
  ValidationReport report = validate_pi(spec, depth);
  for (const Verdict& v : report.verdicts) {
    if (!v.passed) {
      fail(ErrorKind::NotValidated,
           std::string(to_string(v.kind)) + " (" + v.direction + "): " + v.witness);
    }
  }
  return VerifiedIso(std::move(spec), depth);
}

Element extend_pi(const VerifiedIso& iso, const Element& f) {
  const IsoSpec& spec = iso.spec();
  if (&f.graph() != spec.source.get()) fail(ErrorKind::Invalid, "element is not over the source graph");
  return apply_images(*spec.source, spec.target, spec.ring, spec.twist, spec.forward, f);
}

}  // namespace leavitt
