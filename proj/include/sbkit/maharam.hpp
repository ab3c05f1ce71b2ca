// maharam.hpp — classification data for probability algebras: a list of atom
// weights plus homogeneous blocks (weight, cardinal index), all exact
// rationals.  Embeddability is decided two independent ways: a tail-sum
// dominance criterion and a transport feasibility reduction.

#pragma once

#include <optional>
#include <vector>

#include "sbkit/errors.hpp"
#include "sbkit/flow.hpp"
#include "sbkit/rational.hpp"
#include "sbkit/verdict.hpp"

namespace sbkit::maharam {

// Index k stands for the k-th infinite cardinal; the order on indices mirrors
// the order on cardinals.
struct CardinalCode {
  unsigned index = 0;

  auto operator<=>(const CardinalCode&) const = default;
};

struct Block {
  Rat weight;          // > 0
  CardinalCode kappa;  // homogeneity degree

  bool operator==(const Block&) const = default;
};

// Invariant after normalize(): atoms weakly decreasing and positive, block
// kappas strictly decreasing, block weights positive, total mass exactly 1.
struct MaharamInvariant {
  std::vector<Rat> atoms;
  std::vector<Block> blocks;

  bool operator==(const MaharamInvariant&) const = default;
};

// Sorts atoms, merges blocks of equal kappa, orders blocks by descending
// kappa.  Throws ValidationError on a nonpositive weight and BadTotalMass
// unless the weights sum to exactly 1.
MaharamInvariant normalize(const MaharamInvariant& inv);

bool is_normalized(const MaharamInvariant& inv);

// Exact equality of normalized invariants.  Pre: both normalized.
bool is_isomorphic(const MaharamInvariant& a, const MaharamInvariant& b);

// Dominance criterion for an embedding of a into b: the atom lists are
// identical, and for every cardinal kappa the a-mass on blocks of degree
// >= kappa is at most the b-mass on blocks of degree >= kappa.  Pre: both
// normalized.
bool tail_dominance_embeddable(const MaharamInvariant& a, const MaharamInvariant& b);

// Independent route to the same question: mass from a's blocks must route to
// b's blocks along arcs kappa_i <= lambda_j, filling every b-block exactly.
// Returns the routing when feasible.  Pre: both normalized; atom lists must
// be identical (else AtomMismatch), since atoms pair up by exact weight.
// Plan indices refer to positions in a.blocks / b.blocks.
std::optional<flow::TransportPlan> flow_embeddable(const MaharamInvariant& a,
                                                   const MaharamInvariant& b);

// Two-sided comparison via the dominance criterion.  Mutual embeddability
// forces equality of normalized invariants, so the SBFailureWitness verdict
// is unreachable here; if the checks ever disagree with that theorem this
// throws InternalContradiction.  Pre: both normalized.
Verdict sb_decide(const MaharamInvariant& a, const MaharamInvariant& b);

}  // namespace sbkit::maharam
