// apra.hpp — finite approximations to automorphisms of a measure algebra:
// permutations of N equal-mass atoms that preserve a fixed partition into
// consecutive blocks.  Provides genericity defects, tower constructions, two
// distances, and conjugacy certificates with proven error bounds.  All
// measures are exact rationals with denominator N.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sbkit/errors.hpp"
#include "sbkit/rational.hpp"

namespace sbkit::apra {

// Permutation pi of {0..N-1} mapping each block [offset, offset+size) into
// itself; every atom has measure 1/N.
class BlockedPermutationSystem {
 public:
  static BlockedPermutationSystem make(std::vector<std::size_t> block_sizes,
                                       std::vector<std::size_t> pi);

  std::size_t size() const { return pi_.size(); }  // N
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  const std::vector<std::size_t>& pi() const { return pi_; }

  std::size_t block_count() const { return block_sizes_.size(); }
  // [first, last) atom range of a block.
  std::pair<std::size_t, std::size_t> block_range(std::size_t block) const;

  bool same_shape(const BlockedPermutationSystem& other) const {
    return block_sizes_ == other.block_sizes_;
  }

 private:
  BlockedPermutationSystem(std::vector<std::size_t> sizes, std::vector<std::size_t> pi)
      : block_sizes_(std::move(sizes)), pi_(std::move(pi)) {}
  std::vector<std::size_t> block_sizes_;
  std::vector<std::size_t> pi_;
};

// Rokhlin-type tower: base, pi(base), ..., pi^{height-1}(base) pairwise
// disjoint inside one block.  coverage = height * |base| / N, the absolute
// mass the tower occupies.
struct TowerCertificate {
  std::size_t block = 0;
  std::size_t height = 0;
  std::vector<std::size_t> base;  // ascending
  Rat coverage;
};

// phi conjugates the left system toward the right one:
// uniform_distance(phi T phi^{-1}, S) = measured_distance <= bound.
struct ConjugacyCertificate {
  std::vector<std::size_t> phi;
  Rat bound;
  Rat measured_distance;
};

// Mass of the set of atoms whose cycle length divides n, i.e. the fixed-point
// mass of pi^n.  A generic automorphism has defect 0 for every n; large
// defects certify distance from genericity.  Pre: n >= 1.
Rat genericity_defect(const BlockedPermutationSystem& sys, std::size_t n);

// Builds the best tower of the given height inside one block: walk each cycle
// from its lowest atom and keep every n-th element, floor(L/n) per cycle of
// length L, which is the maximum any base can achieve.  Accepts when the
// tower covers at least (1 - eps) of the block's mass; otherwise throws
// TowerDeficit carrying the best achievable relative coverage.  Pre:
// block < block_count, n >= 1, 0 <= eps.
TowerCertificate rokhlin_tower(const BlockedPermutationSystem& sys, std::size_t block,
                               std::size_t n, const Rat& eps);

// Mass of {x : T(x) != S(x)}.  Pre: same shape (else ShapeMismatch).
Rat uniform_distance(const BlockedPermutationSystem& t, const BlockedPermutationSystem& s);

struct SupDistanceResult {
  Rat lower;
  Rat upper;
  bool exact = false;  // lower == upper
};

// sup over atom sets a of the mass of T(a) symmetric-difference S(a).  Exact
// by enumeration of all 2^N sets for N <= 16; for larger N returns a
// certified interval: lower from explicit candidate sets, upper from the
// disagreement mass (images differ only inside images of the disagreement
// set).  Pre: same shape.
SupDistanceResult sup_distance(const BlockedPermutationSystem& t,
                               const BlockedPermutationSystem& s);

// phi T phi^{-1}.  Pre: phi is a block-preserving permutation.
BlockedPermutationSystem conjugate(const BlockedPermutationSystem& t,
                                   const std::vector<std::size_t>& phi);

// Matches height-n towers of T and S block by block (block i, counted from 1,
// gets tower slack eps / 2^i), maps level j of one tower onto level j of the
// other, and pairs leftovers in ascending order.  The resulting conjugation
// moves T within uniform distance bound = 1/n + eps of S; the bound is exact
// rational arithmetic, and the certificate records the measured distance.
// Pre: same shape (ShapeMismatch), n >= 1, eps >= 0; each block must admit a
// tower of relative coverage >= 1 - eps/2^i (else TowerDeficit).
ConjugacyCertificate tower_conjugacy(const BlockedPermutationSystem& t,
                                     const BlockedPermutationSystem& s, std::size_t n,
                                     const Rat& eps);

// One tower_conjugacy step per schedule entry (n_k, eps_k).  The schedule
// must be nonempty with strictly decreasing bounds 1/n_k + eps_k, so the
// certificates witness convergence; otherwise BadSchedule.
std::vector<ConjugacyCertificate> perturbation_sequence(
    const BlockedPermutationSystem& t, const BlockedPermutationSystem& s,
    const std::vector<std::pair<std::size_t, Rat>>& schedule);

}  // namespace sbkit::apra
