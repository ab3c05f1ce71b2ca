// symspec.hpp — finite-dimensional self-adjoint operators: eigensystems,
// functional calculus, spectral descriptions, and approximate unitary
// equivalence witnesses.
//
// All matrices are real symmetric.  Norms written ||.|| are operator norms
// (largest absolute eigenvalue).  Tolerances are pinned here, next to the
// operation they govern, and are part of each contract.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sbkit/dense.hpp"
#include "sbkit/errors.hpp"

namespace sbkit::symspec {

// Eigendecomposition residual: ||A - Q D Q^T|| <= kEigenResidualTol * max(1, ||A||).
inline constexpr double kEigenResidualTol = 1e-10;
// Square-root residual: ||S*S - A|| <= kSqrtResidualTol * max(1, ||A||).
inline constexpr double kSqrtResidualTol = 1e-8;
// Stationarity threshold for the square-root iteration.
inline constexpr double kSqrtStepTol = 1e-12;
inline constexpr int kSqrtMaxSteps = 10000;
inline constexpr int kJacobiMaxSweeps = 100;
// Eigenvalues below -kPositiveEigTol make an operator non-positive.
inline constexpr double kPositiveEigTol = 1e-10;
// Sign / membership tolerance for eigenvalue classification.
inline constexpr double kEigenvalueTol = 1e-9;
// Two spectral values closer than this are treated as equal.
inline constexpr double kValueMatchTol = 1e-9;
// Orthogonality defect allowed in OrthogonalMap: ||U^T U - I|| <= this.
inline constexpr double kOrthogonalityTol = 1e-10;

// Real symmetric matrix.  Construction symmetrises the input exactly, so the
// stored entries satisfy a(i,j) == a(j,i) bit for bit; inputs asymmetric by
// more than kOrthogonalityTol in any entry are rejected.
class SelfAdjointOperator {
 public:
  static SelfAdjointOperator from_rows(const Matrix& rows);
  static SelfAdjointOperator zero(std::size_t dim);
  static SelfAdjointOperator identity(std::size_t dim);
  static SelfAdjointOperator diagonal(const std::vector<double>& d);

  std::size_t dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  explicit SelfAdjointOperator(Matrix entries) : entries_(std::move(entries)) {}
  Matrix entries_;
};

// Square matrix with ||U^T U - I||_max <= kOrthogonalityTol.
class OrthogonalMap {
 public:
  static OrthogonalMap from_rows(const Matrix& rows);
  static OrthogonalMap identity(std::size_t dim);

  std::size_t dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }

 private:
  explicit OrthogonalMap(Matrix entries) : entries_(std::move(entries)) {}
  Matrix entries_;
};

// Multiplicity that is either a natural number or infinite; used for the
// dimension of an eigenspace inside the essential spectrum.
struct EigenMultiplicity {
  bool infinite = false;
  std::uint64_t count = 0;

  static EigenMultiplicity finite(std::uint64_t n) { return {false, n}; }
  static EigenMultiplicity inf() { return {true, 0}; }

  bool operator==(const EigenMultiplicity&) const = default;

  // Dominance order: finite m <= finite n iff m <= n; everything <= infinite.
  bool dominated_by(const EigenMultiplicity& other) const {
    if (other.infinite) return true;
    if (infinite) return false;
    return count <= other.count;
  }
};

struct IsolatedPoint {
  double value = 0.0;
  std::uint64_t multiplicity = 0;  // >= 1

  bool operator==(const IsolatedPoint&) const = default;
};

struct EssentialPoint {
  double value = 0.0;
  EigenMultiplicity eigen_multiplicity;  // may be zero, finite, or infinite

  bool operator==(const EssentialPoint&) const = default;
};

// Spectrum summary: isolated eigenvalues of finite multiplicity plus points
// of the essential spectrum annotated with their eigenspace dimension.
// Invariants: values strictly increasing within each list, the two value sets
// are disjoint, and any two distinct values are separated by more than
// kValueMatchTol so that tolerance matching is unambiguous.
class SpectralDescription {
 public:
  static SpectralDescription make(std::vector<IsolatedPoint> isolated,
                                  std::vector<EssentialPoint> essential);

  const std::vector<IsolatedPoint>& isolated() const { return isolated_; }
  const std::vector<EssentialPoint>& essential() const { return essential_; }

  bool operator==(const SpectralDescription&) const = default;

 private:
  SpectralDescription(std::vector<IsolatedPoint> iso, std::vector<EssentialPoint> ess)
      : isolated_(std::move(iso)), essential_(std::move(ess)) {}
  std::vector<IsolatedPoint> isolated_;
  std::vector<EssentialPoint> essential_;
};

// Half-open cells [lo, hi) tiling [lo(), hi()) consecutively, each with a tag
// point inside it.  mesh() is the widest cell.
class RiemannPartition {
 public:
  struct Cell {
    double lo = 0.0;
    double hi = 0.0;
    double tag = 0.0;
  };

  static RiemannPartition make(std::vector<Cell> cells);
  // Equal-width cells over [lo, hi) with midpoint tags.
  static RiemannPartition uniform(double lo, double hi, std::size_t cell_count);

  const std::vector<Cell>& cells() const { return cells_; }
  double lo() const { return cells_.front().lo; }
  double hi() const { return cells_.back().hi; }
  double mesh() const;

 private:
  explicit RiemannPartition(std::vector<Cell> cells) : cells_(std::move(cells)) {}
  std::vector<Cell> cells_;
};

struct Eigensystem {
  std::vector<double> eigenvalues;  // ascending
  OrthogonalMap basis;              // column j pairs with eigenvalues[j]
};

// Cyclic Jacobi.  Post: A = Q D Q^T up to kEigenResidualTol * max(1, ||A||).
// Throws InternalNoConvergence after kJacobiMaxSweeps sweeps (unreached in
// practice; sized generously).
Eigensystem eigendecompose(const SelfAdjointOperator& a);

// Largest |eigenvalue|.
double operator_norm(const SelfAdjointOperator& a);

// Unique positive square root S of a positive semidefinite A, computed by the
// quadratic iteration B <- B + (A' - B^2) / 2 on A' = A / ||A||, started at 0.
// The iterates commute with A and converge monotonically on the spectrum.
// Throws NotPositive when min eig(A) < -kPositiveEigTol; eigenvalues in
// [-kPositiveEigTol, 0) are clamped to 0 first.
// Post: ||S*S - A|| <= kSqrtResidualTol * max(1, ||A||), S symmetric,
// min eig(S) >= -kEigenvalueTol.
SelfAdjointOperator positive_sqrt(const SelfAdjointOperator& a);

// |A| = positive_sqrt(A^2).
SelfAdjointOperator abs_operator(const SelfAdjointOperator& a);

// Spectral projection E+ onto the span of eigenvectors with eigenvalue
// >= -kEigenvalueTol.  Satisfies, within kEigenvalueTol in operator norm:
// E+ idempotent and symmetric, A E+ >= 0, A (I - E+) <= 0, and E+ commutes
// with every operator commuting with A.
SelfAdjointOperator positive_projection(const SelfAdjointOperator& a);

// Resolution of the identity E_lambda: projection onto the span of
// eigenvectors with eigenvalue strictly below lambda.  Exactly zero when
// lambda <= min eig(A) and exactly the identity when lambda > max eig(A).
SelfAdjointOperator identity_decomposition(const SelfAdjointOperator& a, double lambda);

struct RiemannSum {
  SelfAdjointOperator approximation;
  double error = 0.0;  // ||A - approximation||, always <= partition mesh
};

// Sum of tag_k * E(cell_k) over the partition.  Every eigenvalue of A must
// lie inside [partition.lo(), partition.hi()); otherwise
// PartitionDoesNotCoverSpectrum.
RiemannSum spectral_riemann_sum(const SelfAdjointOperator& a,
                                const RiemannPartition& partition);

// Groups eigenvalues into clusters whose consecutive gaps exceed cluster_tol;
// each cluster becomes one isolated point (mean value, cluster size).  The
// essential list is empty: a finite-dimensional operator has no essential
// spectrum.  Pre: cluster_tol > kValueMatchTol so the result is well formed.
SpectralDescription describe(const SelfAdjointOperator& a, double cluster_tol);

// Equality of spectra up to kValueMatchTol: isolated points match bijectively
// with equal multiplicities, essential value sets match bijectively.  The
// eigenspace dimensions attached to essential points are NOT compared: they
// are invisible to the spectrum-only invariant.
bool spectrally_equivalent(const SpectralDescription& d1, const SpectralDescription& d2);

// Necessary conditions for an embedding of the first structure into the
// second: spectrum containment sigma(d1) within sigma(d2), essential spectrum
// containment, and pointwise eigenspace-dimension dominance (isolated
// multiplicities and essential eigen-multiplicities both count; infinite
// dominates everything).  Matching is up to kValueMatchTol.
bool description_embeddable(const SpectralDescription& d1, const SpectralDescription& d2);

// Orthogonal U with ||A2 - U A1 U^T|| < epsilon, built by matching the two
// spectra cell by cell over a shared partition of mesh < epsilon.  Pre:
// epsilon > 0, equal dimensions (else DimensionMismatch).  Throws
// CellRankMismatch(cell, rank1, rank2) when some cell holds eigenspaces of
// different dimension, i.e. when the sorted spectra cannot be matched within
// the cell widths.
OrthogonalMap approximate_unitary(const SelfAdjointOperator& a1,
                                  const SelfAdjointOperator& a2, double epsilon);

struct ProjectionInvariant {
  std::uint64_t rank = 0;
  std::uint64_t corank = 0;

  bool operator==(const ProjectionInvariant&) const = default;
};

// Classifies a projection by (rank, corank); two projections on spaces of
// equal dimension are unitarily conjugate iff these agree.  Throws
// NotAProjection when ||P^2 - P|| > tol.
ProjectionInvariant projection_pair_invariant(const SelfAdjointOperator& p, double tol);

}  // namespace sbkit::symspec
