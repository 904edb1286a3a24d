#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leavitt/corpus.hpp"
#include "leavitt/harness.hpp"
#include "leavitt/sampling.hpp"

// Brute-force oracles and the seeded property checks built on them. Each
// check returns a PropertyResult; the CLI and the acceptance suite only
// choose graphs, seeds and sample counts.

namespace leavitt {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  //! Extra counters worth reporting, such as branch coverage.
  std::string notes;

  bool passed() const { return failures == 0; }
  //! Records one case.
  void check(bool ok, const std::string& what);
};

//! Merges results of the same property over several inputs.
PropertyResult merge(std::string name, const std::vector<PropertyResult>& parts);

// ---- oracles -------------------------------------------------------------

//! (f*g)(arrow) as the convolution sum over factorizations arrow = a b,
//! using only evaluate() and groupoid composition.
Scalar convolution_oracle(const Element& f, const Element& g, const Arrow& arrow);

//! Conjugated cylinder idempotents are diagonal at every depth from 0 to
//! normalizer_check_depth(n) + extra.
bool normalizer_oracle(const Element& n, std::size_t extra);

//! Germ equality decided from point samples: some cylinder Z(x(0,m)) with
//! m <= max source length + 2 on which both rules give the same arrow at
//! every listed lasso.
bool germ_oracle(const Graph& graph, const RewriteRule& first, const RewriteRule& second,
                 const Lasso& x, const std::vector<Lasso>& lassos);

//! All arrows of the support of f whose source is y.
std::vector<Arrow> support_arrows_at(const Element& f, const Lasso& y);

// ---- properties ------------------------------------------------------------

PropertyResult check_leavitt_family(const GraphPtr& graph, Ring ring);
PropertyResult check_convolution(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                 std::size_t pairs, std::size_t arrows);
PropertyResult check_ring_laws(const GraphPtr& graph, Ring ring, std::uint64_t seed, std::size_t triples);
PropertyResult check_grading(const GraphPtr& graph, Ring ring, std::uint64_t seed, std::size_t cases);
PropertyResult check_literal_round_trip(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                        std::size_t cases);

//! Arrows of supp(n) sharing a source share their range.
PropertyResult check_support_isotropy(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                      std::size_t normalizers, std::size_t lassos);
//! n* d n = (d o alpha_n) n* n.
PropertyResult check_conjugation_law(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                     std::size_t pairs);
//! alpha_{mn} = alpha_m o alpha_n and alpha_{n*} = alpha_n^-1, pointwise.
PropertyResult check_action_composition(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                        std::size_t pairs, std::size_t lassos);

//! Compressions at isolated points are single terms of degree a multiple of
//! the cycle length.
PropertyResult check_compression_shape(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                       std::size_t normalizers);
//! p_x a p_x = r p_x for degree-0 a.
PropertyResult check_compression_scalar(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                        std::size_t cases);
//! n p_x = p_{alpha_n(x)} n for x in dom(n).
PropertyResult check_projection_intertwining(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                             std::size_t normalizers);

PropertyResult check_weyl_equivalence(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                      std::size_t triples);
//! phi(gh) ~ phi(g) phi(h).
PropertyResult check_phi_homomorphism(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                      std::size_t pairs);
//! phi_inverse(phi(g)) = g and phi(phi_inverse(c)) ~ c; notes count the
//! branches taken.
PropertyResult check_phi_round_trips(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                     std::size_t samples);
//! How often each phi_inverse branch was taken.
struct BranchCounts {
  std::size_t non_isolated = 0;
  std::size_t isolated_aperiodic = 0;
  std::size_t isolated_periodic = 0;
};
BranchCounts phi_inverse_branches(const GraphPtr& graph, Ring ring, std::uint64_t seed,
                                  std::size_t samples);

PropertyResult check_boolean_laws(const GraphPtr& graph, std::uint64_t seed, std::size_t triples);
//! rho_inverse of the chain of x is x, and x lies in every basis set.
PropertyResult check_rho_round_trip(const GraphPtr& graph, std::size_t max_size);
//! x in L iff kappa(x) in supp(pi(1_L)) for every compact open L of depth
//! at most `depth`, by linearity over depth-level cylinders, plus `direct`
//! full computations on random L.
PropertyResult check_kappa_iff(const VerifiedIso& iso, std::size_t depth, std::size_t points,
                               std::size_t direct, std::uint64_t seed);
//! supp(d) = supp(pi(d) o kappa) at sampled lassos.
PropertyResult check_kappa_support_law(const VerifiedIso& iso, std::uint64_t seed, std::size_t cases);
//! pi(p_x) = p_{kappa(x)} for isolated x of description size at most 4.
PropertyResult check_kappa_isolated(const VerifiedIso& iso);
//! x in dom(n) iff kappa(x) in dom(pi(n)).
PropertyResult check_kappa_domain(const VerifiedIso& iso, std::uint64_t seed, std::size_t normalizers);
//! kappa(alpha_n(x)) = alpha_{pi(n)}(kappa(x)).
PropertyResult check_kappa_equivariance(const VerifiedIso& iso, std::uint64_t seed, std::size_t cases);

//! extend_pi(f g) = extend_pi(f) extend_pi(g).
PropertyResult check_extend_multiplicative(const VerifiedIso& iso, std::uint64_t seed, std::size_t pairs);
//! psi respects composition and inverses of Weyl classes.
PropertyResult check_psi_homomorphism(const VerifiedIso& iso, std::uint64_t seed, std::size_t samples);
//! groupoid_iso_from_pi passes its checks; pi_from_groupoid_iso of it
//! validates to depth 4; the round trip reproduces the table to depth 3.
PropertyResult check_main_round_trip(const CorpusEntry& entry, std::uint64_t seed, std::size_t samples);
//! A negative control fails validation with a witness of the expected kind.
PropertyResult check_negative_control(const CorpusEntry& entry);

//! is_normalizer agrees with normalizer_oracle on every element with at most
//! two terms drawn from cylinders of length at most 1, with coefficients
//! 1 or 2 (and -1, i over Z[i]).
PropertyResult check_normalizer_bound(const GraphPtr& graph, Ring ring);
//! germs_agree agrees with germ_oracle for all rule pairs from cylinders of
//! length at most 2 at every non-isolated lasso of size at most 3, against
//! all lassos of description size at most 8.
PropertyResult check_germ_reduction(const GraphPtr& graph);

//! Suite names for check-props: algebra, action, isolated, weyl, stone,
//! iso, oracle and all.
const std::vector<std::string>& suite_names();
//! Runs a suite on one graph (the iso suite runs the whole corpus). Results
//! are sorted by property name.
std::vector<PropertyResult> run_suite(const std::string& suite, const GraphPtr& graph, Ring ring,
                                      std::uint64_t seed);

}  // namespace leavitt
