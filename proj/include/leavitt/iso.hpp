#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/element.hpp"

namespace leavitt {

//! Images of the generators p_v, s_e and the ghosts s_e^* of one graph.
struct GeneratorImages {
  std::map<VertexId, Element> vertex;
  std::map<EdgeId, Element> edge;
  std::map<EdgeId, Element> ghost;
};

//! A candidate diagonal-preserving ring *-isomorphism between the algebras of
//! two graphs: generator images, a coefficient twist, and a declared inverse.
struct IsoSpec {
  GraphPtr source;
  GraphPtr target;
  Ring ring = Ring::Integer;
  Twist twist = Twist::Identity;
  //! Elements over `target`.
  GeneratorImages forward;
  //! Elements over `source`.
  GeneratorImages backward;

  //! The declared inverse as a spec in its own right.
  IsoSpec inverted() const;
};

//! Applies generator images term by term:
//! r 1_{Z(mu,nu)} -> twist(r) S_mu T_nu-reversed. No validity checks beyond
//! completeness of the images.
Element apply_images(const Graph& domain, const GraphPtr& codomain, Ring ring, Twist twist,
                     const GeneratorImages& images, const Element& f);

enum class CheckKind {
  Completeness,
  VertexIdempotent,
  VertexOrthogonal,
  L1,
  L2,
  L3,
  L4,
  Star,
  Diagonal,
  Composite,
};

std::string_view to_string(CheckKind kind);

struct Verdict {
  CheckKind kind;
  //! "forward" or "inverse".
  std::string direction;
  std::string subject;
  bool passed = true;
  //! For failures: the offending expression and what it evaluated to.
  std::string witness;
};

struct ValidationReport {
  std::vector<Verdict> verdicts;

  bool passed() const;
  std::vector<Verdict> failures() const;
  std::optional<Verdict> first_failure(CheckKind kind) const;
};

//! Relations, star compatibility, diagonal preservation up to `depth`, and
//! the same for the declared inverse, plus both composites on generators.
ValidationReport validate_pi(const IsoSpec& spec, std::size_t depth);

//! An IsoSpec whose validation passed.
class VerifiedIso {
 public:
  //! Throws NotValidated carrying the first failing witness.
  static VerifiedIso verify(IsoSpec spec, std::size_t depth);

  const IsoSpec& spec() const noexcept { return spec_; }
  std::size_t depth() const noexcept { return depth_; }
  VerifiedIso inverse() const { return VerifiedIso(spec_.inverted(), depth_); }

 private:
  VerifiedIso(IsoSpec spec, std::size_t depth) : spec_(std::move(spec)), depth_(depth) {}
  IsoSpec spec_;
  std::size_t depth_;
};

//! The extension of a verified spec to the whole algebra of its source.
Element extend_pi(const VerifiedIso& iso, const Element& f);

}  // namespace leavitt
