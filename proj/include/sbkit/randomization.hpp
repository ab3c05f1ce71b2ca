// randomization.hpp — catalogs of models ordered by embeddability, and
// density profiles over a catalog.  A profile assigns each model a rational
// mass; profile p embeds into profile q when p's mass can be transported onto
// q's along the embeddability order.  On partial orders mutual embeddability
// forces equality; on genuine preorders it does not, and dlo_counterexample
// exhibits the failure.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbkit/errors.hpp"
#include "sbkit/flow.hpp"
#include "sbkit/rational.hpp"
#include "sbkit/verdict.hpp"

namespace sbkit::randomization {

// embeds[i][j] == true iff model ids[i] embeds into model ids[j].  The
// relation must be reflexive and transitive (a preorder); it need not be
// antisymmetric.
struct ModelCatalog {
  std::vector<std::string> ids;
  std::vector<std::vector<bool>> embeds;

  bool operator==(const ModelCatalog&) const = default;
};

// Checks ids (nonempty, distinct), shape, reflexivity and transitivity;
// throws NotAPreorder when the relation fails to be a preorder and
// ValidationError on structural defects.  Returns true iff the preorder is
// additionally antisymmetric, i.e. a partial order.
bool validate_catalog(const ModelCatalog& catalog);

// Total order refining a partial order: repeatedly emit a model all of whose
// strict predecessors are already emitted, preferring a model that embeds
// into every remaining one (when the catalog has such a prime candidate) and
// breaking remaining ties by smallest identifier.  Deterministic.  Throws
// NotAPartialOrder when the catalog is a preorder but not a partial order.
std::vector<std::string> linear_extension(const ModelCatalog& catalog);

// Mass assignment over a catalog: rho[i] >= 0, sum exactly 1.
struct DensityProfile {
  ModelCatalog catalog;
  std::vector<Rat> rho;

  bool operator==(const DensityProfile&) const = default;
};

// Validates the catalog, nonnegativity, and unit total mass.
DensityProfile make_profile(ModelCatalog catalog, std::vector<Rat> rho);

// Dominance criterion for an embedding of p into q: on every up-closed set U
// of the catalog order, p(U) <= q(U).  Mass inside an up-set can never leave
// it, so the criterion is equivalent to transport feasibility; for catalogs
// of at most 20 models all up-sets are enumerated directly, beyond that the
// check delegates to the transport reduction.  Pre: same catalog on both
// profiles (else CatalogMismatch).
bool upset_dominance_embeddable(const DensityProfile& p, const DensityProfile& q);

// Independent route: route p's mass to q's along arcs i -> j with
// embeds[i][j], filling q exactly.  Returns the plan when feasible.  Plan
// indices refer to catalog positions.  Pre: same catalog (CatalogMismatch).
std::optional<flow::TransportPlan> flow_embeddable(const DensityProfile& p,
                                                   const DensityProfile& q);

// Two-sided comparison.  Equal profiles are Isomorphic; mutual dominance with
// unequal profiles is impossible over a partial order (InternalContradiction
// if ever observed) and yields SBFailureWitness over a genuine preorder.
Verdict sb_decide_randomization(const DensityProfile& p, const DensityProfile& q);

struct MutualEmbeddingCounterexample {
  ModelCatalog catalog;
  DensityProfile left;
  DensityProfile right;
};

// Two dense-linear-order models, each embeddable into the other yet distinct,
// with the two Dirac profiles: both profiles embed into each other while the
// profiles differ, so sb_decide_randomization returns SBFailureWitness.
MutualEmbeddingCounterexample dlo_counterexample();

}  // namespace sbkit::randomization
