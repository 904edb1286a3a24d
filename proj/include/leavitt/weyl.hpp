#pragma once

#include <utility>

#include "leavitt/action.hpp"

namespace leavitt {

//! A pair (n, x) with n a normalizer and x in dom(n), standing for its class
//! in the Weyl groupoid. The representative is not canonical; compare
//! classes with equivalent().
class WeylClass {
 public:
  //! Throws NotANormalizer or OutsideDomain.
  static WeylClass make(Element n, Lasso x);
  //! Skips the normalizer test; still throws OutsideDomain.
  static WeylClass trusted(Element n, Lasso x);

  const Element& representative() const noexcept { return rep_; }
  const Lasso& base() const noexcept { return base_; }
  const PartialMap& action() const noexcept { return action_; }
  //! alpha_n(x).
  const Lasso& image() const noexcept { return image_; }

 private:
  WeylClass(Element rep, Lasso base, PartialMap action, Lasso image)
      : rep_(std::move(rep)), base_(std::move(base)), action_(std::move(action)),
        image_(std::move(image)) {}

  Element rep_;
  Lasso base_;
  PartialMap action_;
  Lasso image_;
};

//! Germ equality of two rewrite rules at a non-isolated x: both rules are
//! refined along x to the longer source length and must then coincide.
bool germs_agree(const Graph& graph, const RewriteRule& first, const RewriteRule& second,
                 const Lasso& x);

bool equivalent(const WeylClass& a, const WeylClass& b);
//! Validating form; throws NotANormalizer or OutsideDomain.
bool equivalent(const Element& n, const Lasso& x, const Element& m, const Lasso& y);

//! [(n1,x1)][(n2,x2)] = [(n1 n2, x2)]; throws NotComposable unless
//! alpha_{n2}(x2) = x1.
WeylClass weyl_compose(const WeylClass& first, const WeylClass& second);
WeylClass weyl_inverse(const WeylClass& c);
WeylClass weyl_range(const WeylClass& c);
WeylClass weyl_source(const WeylClass& c);

//! The smallest cylinder Z(x(0,m), y(0,m-k)) containing the arrow (x,k,y).
Cylinder minimal_cylinder(const Graph& graph, const Arrow& arrow);

//! The class of the indicator of minimal_cylinder(arrow) at its source.
WeylClass phi(const GraphPtr& graph, Ring ring, const Arrow& arrow);

//! Which construction phi_inverse used. Isolated paths that are not
//! eventually periodic cannot occur on a finite graph, so IsolatedAperiodic
//! is never produced here.
enum class InverseBranch { NonIsolated, IsolatedAperiodic, IsolatedPeriodic };

std::pair<Arrow, InverseBranch> phi_inverse_traced(const WeylClass& c);
Arrow phi_inverse(const WeylClass& c);

struct LagSplit {
  std::size_t cycle_powers_range = 0;   // i
  std::size_t cycle_powers_source = 0;  // j
  friend bool operator==(const LagSplit&, const LagSplit&) = default;
};

//! With nu.x = kappa eta^inf and mu.x = lambda eta^inf written with the same
//! cycle eta and shortest stems, returns (i, j) with
//! |mu| - |nu| = |lambda eta^i| - |kappa eta^j|.
LagSplit lag_decompose(const Graph& graph, const Lasso& x, const Path& mu, const Path& nu);

}  // namespace leavitt
