#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "leavitt/element.hpp"

namespace leavitt {

//! Seeded random paths, lassos, arrows and elements over one graph.
class Sampler {
 public:
  Sampler(GraphPtr graph, Ring ring, std::uint64_t seed);

  std::mt19937_64& engine() noexcept { return engine_; }
  std::size_t below(std::size_t bound);

  VertexId vertex();
  //! A path of the given length walking away from a random vertex.
  Path path_of_length(std::size_t length);
  //! Length uniform in [0, max_length].
  Path path(std::size_t max_length);
  //! A path of length at most `length` ending at source `v`, grown backwards.
  //! Stops early at a vertex that receives no edge from anywhere.
  Path path_into(VertexId v, std::size_t length);

  //! Z(mu,nu) with |mu|, |nu| <= max_length.
  Cylinder cylinder(std::size_t max_length);
  //! Uniform among lassos of description size at most max_size.
  Lasso lasso(std::size_t max_size);
  //! Uniform among those lassos with range v.
  Lasso lasso_from(VertexId v, std::size_t max_size);
  //! path followed by lasso_from(s(path), max_size).
  Lasso lasso_through(const Path& path, std::size_t max_size);

  //! An arrow (x, k, y) obtained by replacing up to `steps` leading edges of
  //! a random lasso with a random path.
  Arrow arrow(std::size_t max_size, std::size_t steps);
  Arrow arrow_with_source(const Lasso& y, std::size_t steps);
  Arrow arrow_with_range(const Lasso& x, std::size_t steps);

  //! Entries in [-bound, bound], with an imaginary part over Z[i].
  Scalar scalar(int bound);
  //! One of the units of the ring.
  Scalar unit();
  Element element(std::size_t max_terms, std::size_t max_length);
  Element diagonal(std::size_t max_terms, std::size_t max_length);
  //! Scaled cylinders with pairwise disjoint sources and pairwise disjoint
  //! ranges; nonzero coefficients in [-2, 2].
  Element partial_bisection(std::size_t max_terms, std::size_t max_length);
  //! A partial_bisection that passes is_normalizer.
  Element normalizer(std::size_t max_terms, std::size_t max_length);
  //! A normalizer whose domain contains x.
  Element normalizer_at(const Lasso& x, std::size_t max_terms, std::size_t max_length);

 private:
  GraphPtr graph_;
  Ring ring_;
  std::mt19937_64 engine_;
  void cache_lassos(std::size_t max_size);

  std::size_t lasso_size_ = 0;
  std::vector<Lasso> lassos_;
  std::vector<std::vector<Lasso>> lassos_by_range_;
};

}  // namespace leavitt
