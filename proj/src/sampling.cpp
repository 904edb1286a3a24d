#include "leavitt/sampling.hpp"

#include "leavitt/action.hpp"
#include "leavitt/error.hpp"

namespace leavitt {

Sampler::Sampler(GraphPtr graph, Ring ring, std::uint64_t seed)
    : graph_(std::move(graph)), ring_(ring), engine_(seed) {}

std::size_t Sampler::below(std::size_t bound) {
  if (bound == 0) fail(ErrorKind::Invalid, "empty sampling range");
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
}

VertexId Sampler::vertex() { return static_cast<VertexId>(below(graph_->vertex_count())); }

Path Sampler::path_of_length(std::size_t length) {
  Path p = Path::vertex(vertex());
  for (std::size_t i = 0; i < length; ++i) {
    const auto& next = graph_->range_edges(p.source());
    p = append_edge(*graph_, p, next[below(next.size())]);
  }
  return p;
}

Path Sampler::path(std::size_t max_length) { return path_of_length(below(max_length + 1)); }

Path Sampler::path_into(VertexId v, std::size_t length) {
  Path p = Path::vertex(v);
  for (std::size_t i = 0; i < length; ++i) {
    const auto& before = graph_->source_edges(p.range());
    if (before.empty()) break;
    p = concat(*graph_, Path::edge(*graph_, before[below(before.size())]), p);
  }
  return p;
}

Cylinder Sampler::cylinder(std::size_t max_length) {
  Path nu = path(max_length);
  Path mu = path_into(nu.source(), below(max_length + 1));
  return Cylinder{mu, nu};
}

void Sampler::cache_lassos(std::size_t max_size) {
  if (max_size == lasso_size_ && !lassos_.empty()) return;
  lassos_ = lassos_up_to(*graph_, max_size);
  lasso_size_ = max_size;
  lassos_by_range_.assign(graph_->vertex_count(), {});
  for (const Lasso& x : lassos_) lassos_by_range_[x.range()].push_back(x);
}

Lasso Sampler::lasso(std::size_t max_size) {
  cache_lassos(max_size);
  return lassos_[below(lassos_.size())];
}

Lasso Sampler::lasso_from(VertexId v, std::size_t max_size) {
  cache_lassos(max_size);
  const auto& pool = lassos_by_range_.at(v);
  if (pool.empty()) fail(ErrorKind::Invalid, "no lasso starts at the vertex within the size bound");
  return pool[below(pool.size())];
}

Lasso Sampler::lasso_through(const Path& path, std::size_t max_size) {
  return prepend(*graph_, path, lasso_from(path.source(), max_size));
}

Arrow Sampler::arrow(std::size_t max_size, std::size_t steps) {
  return arrow_with_source(lasso(max_size), steps);
}

Arrow Sampler::arrow_with_source(const Lasso& y, std::size_t steps) {
  std::size_t n = below(steps + 1);
  Lasso tail = shift(*graph_, y, n);
  Path mu = path_into(tail.range(), below(steps + 1));
  Lasso x = prepend(*graph_, mu, tail);
  return Arrow{x, static_cast<Lag>(mu.length()) - static_cast<Lag>(n), y};
}

Arrow Sampler::arrow_with_range(const Lasso& x, std::size_t steps) {
  return invert(arrow_with_source(x, steps));
}

Scalar Sampler::scalar(int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  int re = entry(engine_);
  int im = ring_ == Ring::Gaussian ? entry(engine_) : 0;
  return Scalar(ring_, re, im);
}

Scalar Sampler::unit() {
  std::size_t choices = ring_ == Ring::Gaussian ? 4 : 2;
  switch (below(choices)) {
    case 0: return Scalar::one(ring_);
    case 1: return -Scalar::one(ring_);
    case 2: return Scalar::i(ring_);
    default: return -Scalar::i(ring_);
  }
}

Element Sampler::element(std::size_t max_terms, std::size_t max_length) {
  std::vector<std::pair<Cylinder, Scalar>> terms;
  for (std::size_t k = below(max_terms) + 1; k > 0; --k) {
    terms.emplace_back(cylinder(max_length), scalar(3));
  }
  return Element::from_terms(graph_, ring_, terms);
}

Element Sampler::diagonal(std::size_t max_terms, std::size_t max_length) {
  std::vector<std::pair<Cylinder, Scalar>> terms;
  for (std::size_t k = below(max_terms) + 1; k > 0; --k) {
    terms.emplace_back(unit_cylinder(path(max_length)), scalar(3));
  }
  return Element::from_terms(graph_, ring_, terms);
}

namespace {

bool comparable(const Path& a, const Path& b) { return is_prefix(a, b) || is_prefix(b, a); }

}  // namespace

Element Sampler::partial_bisection(std::size_t max_terms, std::size_t max_length) {
  std::vector<std::pair<Cylinder, Scalar>> terms;
  std::size_t wanted = below(max_terms) + 1;
  for (std::size_t attempt = 0; attempt < 8 * wanted && terms.size() < wanted; ++attempt) {
    Cylinder c = cylinder(max_length);
    bool clash = false;
    for (const auto& [other, coeff] : terms) {
      if (comparable(c.source_path, other.source_path) || comparable(c.range_path, other.range_path)) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    Scalar r = below(4) == 0 ? Scalar(ring_, below(2) == 0 ? 2 : -2) : unit();
    terms.emplace_back(c, r);
  }
  return Element::from_terms(graph_, ring_, terms);
}

Element Sampler::normalizer(std::size_t max_terms, std::size_t max_length) {
  for (;;) {
    Element n = partial_bisection(max_terms, max_length);
    if (is_normalizer(n)) return n;
  }
}

Element Sampler::normalizer_at(const Lasso& x, std::size_t max_terms, std::size_t max_length) {
  for (;;) {
    Path nu = x.initial(*graph_, below(max_length + 1));
    Path mu = path_into(nu.source(), below(max_length + 1));
    Element rest = partial_bisection(max_terms, max_length);
    std::vector<std::pair<Cylinder, Scalar>> terms{{Cylinder{mu, nu}, unit()}};
    for (const auto& [c, r] : rest.terms()) {
      if (!comparable(c.source_path, nu) && !comparable(c.range_path, mu)) terms.emplace_back(c, r);
    }
    Element candidate = Element::from_terms(graph_, ring_, terms);
    if (is_normalizer(candidate)) return candidate;
  }
}

}  // namespace leavitt
