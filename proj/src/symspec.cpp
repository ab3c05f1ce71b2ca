// symspec.cpp — spectral machinery for real symmetric matrices.

#include "sbkit/symspec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sbkit::symspec {

namespace {

// Largest admissible entry-wise asymmetry / orthogonality defect on input.
constexpr double kInputTol = kOrthogonalityTol;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

// ---- construction ----

SelfAdjointOperator SelfAdjointOperator::from_rows(const Matrix& rows) {
  if (rows.rows() != rows.cols()) {
    throw ValidationError("symmetry", "matrix is not square");
  }
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    for (std::size_t j = i + 1; j < rows.cols(); ++j) {
      if (std::fabs(rows(i, j) - rows(j, i)) > kInputTol) {
        throw ValidationError("symmetry", "entries (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") disagree");
      }
    }
  }
  return SelfAdjointOperator(symmetric_part(rows));
}

SelfAdjointOperator SelfAdjointOperator::zero(std::size_t dim) {
  return SelfAdjointOperator(Matrix(dim, dim));
}

SelfAdjointOperator SelfAdjointOperator::identity(std::size_t dim) {
  return SelfAdjointOperator(Matrix::identity(dim));
}

SelfAdjointOperator SelfAdjointOperator::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SelfAdjointOperator(std::move(m));
}

OrthogonalMap OrthogonalMap::from_rows(const Matrix& rows) {
  if (rows.rows() != rows.cols()) {
    throw ValidationError("orthogonality", "matrix is not square");
  }
  const Matrix defect = transpose(rows) * rows - Matrix::identity(rows.rows());
  if (max_abs(defect) > kInputTol) {
    throw ValidationError("orthogonality",
                          "||U^T U - I|| = " + fmt(max_abs(defect)));
  }
  return OrthogonalMap(rows);
}

OrthogonalMap OrthogonalMap::identity(std::size_t dim) {
  return OrthogonalMap(Matrix::identity(dim));
}

SpectralDescription SpectralDescription::make(std::vector<IsolatedPoint> isolated,
                                              std::vector<EssentialPoint> essential) {
  std::sort(isolated.begin(), isolated.end(),
            [](const IsolatedPoint& a, const IsolatedPoint& b) { return a.value < b.value; });
  std::sort(essential.begin(), essential.end(),
            [](const EssentialPoint& a, const EssentialPoint& b) { return a.value < b.value; });
  for (const IsolatedPoint& p : isolated) {
    if (p.multiplicity == 0) {
      throw ValidationError("multiplicity", "isolated point " + fmt(p.value) +
                                                " has multiplicity 0");
    }
  }
  std::vector<double> all;
  for (const IsolatedPoint& p : isolated) all.push_back(p.value);
  for (const EssentialPoint& p : essential) all.push_back(p.value);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i] - all[i - 1] <= kValueMatchTol) {
      throw ValidationError("value separation", fmt(all[i - 1]) + " and " + fmt(all[i]) +
                                                    " are closer than the match tolerance");
    }
  }
  return SpectralDescription(std::move(isolated), std::move(essential));
}

RiemannPartition RiemannPartition::make(std::vector<Cell> cells) {
  if (cells.empty()) throw ValidationError("partition", "no cells");
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    if (!(c.lo < c.hi)) {
      throw ValidationError("partition", "cell " + std::to_string(k) + " is empty");
    }
    if (!(c.lo <= c.tag && c.tag < c.hi)) {
      throw ValidationError("partition", "tag of cell " + std::to_string(k) +
                                             " lies outside the cell");
    }
    if (k > 0 && cells[k - 1].hi != c.lo) {
      throw ValidationError("partition", "cells " + std::to_string(k - 1) + " and " +
                                             std::to_string(k) + " are not consecutive");
    }
  }
  return RiemannPartition(std::move(cells));
}

RiemannPartition RiemannPartition::uniform(double lo, double hi, std::size_t cell_count) {
  if (cell_count == 0) throw ValidationError("partition", "no cells");
  if (!(lo < hi)) throw ValidationError("partition", "empty range");
  std::vector<Cell> cells(cell_count);
  const double width = (hi - lo) / static_cast<double>(cell_count);
  for (std::size_t k = 0; k < cell_count; ++k) {
    cells[k].lo = (k == 0) ? lo : cells[k - 1].hi;
    cells[k].hi = (k + 1 == cell_count) ? hi : lo + width * static_cast<double>(k + 1);
    cells[k].tag = 0.5 * (cells[k].lo + cells[k].hi);
  }
  return RiemannPartition(std::move(cells));
}

double RiemannPartition::mesh() const {
  double m = 0.0;
  for (const Cell& c : cells_) m = std::max(m, c.hi - c.lo);
  return m;
}

// ---- eigensystem ----

Eigensystem eigendecompose(const SelfAdjointOperator& op) {
  const std::size_t n = op.dim();
  Matrix a = op.entries();
  Matrix q = Matrix::identity(n);

  const double scale = std::max(1.0, frobenius_norm(a));
  const double stop = 1e-12 * scale;

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  bool converged = n < 2 || off_norm() <= stop;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (std::fabs(apr) <= std::numeric_limits<double>::min()) {
          a(p, r) = a(r, p) = 0.0;
          continue;
        }
        const double tau = (a(r, r) - a(p, p)) / (2.0 * apr);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double app = a(p, p);
        const double arr = a(r, r);
        a(p, p) = c * c * app - 2.0 * s * c * apr + s * s * arr;
        a(r, r) = s * s * app + 2.0 * s * c * apr + c * c * arr;
        a(p, r) = a(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == r) continue;
          const double akp = a(k, p);
          const double akr = a(k, r);
          a(k, p) = a(p, k) = c * akp - s * akr;
          a(k, r) = a(r, k) = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = q(k, p);
          const double qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    }
    converged = off_norm() <= stop;
  }
  if (!converged) {
    throw InternalNoConvergence("Jacobi sweeps exhausted at off-norm " + fmt(off_norm()));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Eigensystem sys{std::vector<double>(n), OrthogonalMap::identity(0)};
  Matrix basis(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    sys.eigenvalues[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = q(i, order[j]);
  }
  sys.basis = OrthogonalMap::from_rows(basis);
  return sys;
}

double operator_norm(const SelfAdjointOperator& a) {
  double m = 0.0;
  for (double ev : eigendecompose(a).eigenvalues) m = std::max(m, std::fabs(ev));
  return m;
}

namespace {

// Q diag(d) Q^T, with exact zero / identity shortcuts for constant d.
SelfAdjointOperator reconstruct(const Eigensystem& sys, const std::vector<double>& d) {
  const std::size_t n = d.size();
  if (std::all_of(d.begin(), d.end(), [](double x) { return x == 0.0; })) {
    return SelfAdjointOperator::zero(n);
  }
  if (std::all_of(d.begin(), d.end(), [](double x) { return x == 1.0; })) {
    return SelfAdjointOperator::identity(n);
  }
  const Matrix& qm = sys.basis.entries();
  Matrix scaled = qm;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= d[j];
  return SelfAdjointOperator::from_rows(symmetric_part(scaled * transpose(qm)));
}

}  // namespace

// ---- functional calculus ----

SelfAdjointOperator positive_sqrt(const SelfAdjointOperator& op) {
  const Eigensystem sys = eigendecompose(op);
  const std::size_t n = op.dim();
  if (n == 0) return op;

  const double lo = sys.eigenvalues.front();
  const double hi = sys.eigenvalues.back();
  if (lo < -kPositiveEigTol) {
    throw NotPositive("minimal eigenvalue " + fmt(lo));
  }

  // Clamp the tolerated negative dust to zero before iterating.
  SelfAdjointOperator base = op;
  if (lo < 0.0) {
    std::vector<double> clamped = sys.eigenvalues;
    for (double& ev : clamped) ev = std::max(ev, 0.0);
    base = reconstruct(sys, clamped);
  }

  const double norm = std::max(0.0, std::max(hi, -lo));
  if (norm == 0.0) return SelfAdjointOperator::zero(n);

  const Matrix scaled = (1.0 / norm) * base.entries();
  Matrix b(n, n);
  for (int step = 0; step < kSqrtMaxSteps; ++step) {
    const Matrix next = symmetric_part(b + 0.5 * (scaled - b * b));
    const double delta = frobenius_norm(next - b);
    b = next;
    if (delta <= kSqrtStepTol) break;
  }
  return SelfAdjointOperator::from_rows(std::sqrt(norm) * b);
}

SelfAdjointOperator abs_operator(const SelfAdjointOperator& a) {
  const Matrix sq = a.entries() * a.entries();
  return positive_sqrt(SelfAdjointOperator::from_rows(symmetric_part(sq)));
}

SelfAdjointOperator positive_projection(const SelfAdjointOperator& a) {
  const Eigensystem sys = eigendecompose(a);
  std::vector<double> d(a.dim());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = sys.eigenvalues[i] >= -kEigenvalueTol ? 1.0 : 0.0;
  }
  return reconstruct(sys, d);
}

SelfAdjointOperator identity_decomposition(const SelfAdjointOperator& a, double lambda) {
  const Eigensystem sys = eigendecompose(a);
  std::vector<double> d(a.dim());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = sys.eigenvalues[i] < lambda ? 1.0 : 0.0;
  }
  return reconstruct(sys, d);
}

RiemannSum spectral_riemann_sum(const SelfAdjointOperator& a,
                                const RiemannPartition& partition) {
  const Eigensystem sys = eigendecompose(a);
  std::vector<double> tags(a.dim());
  for (std::size_t i = 0; i < sys.eigenvalues.size(); ++i) {
    const double ev = sys.eigenvalues[i];
    const auto& cells = partition.cells();
    const auto it = std::find_if(cells.begin(), cells.end(), [&](const auto& c) {
      return c.lo <= ev && ev < c.hi;
    });
    if (it == cells.end()) {
      throw PartitionDoesNotCoverSpectrum("eigenvalue " + fmt(ev) + " outside [" +
                                          fmt(partition.lo()) + ", " +
                                          fmt(partition.hi()) + ")");
    }
    tags[i] = it->tag;
  }
  RiemannSum out{reconstruct(sys, tags), 0.0};
  out.error = operator_norm(
      SelfAdjointOperator::from_rows(a.entries() - out.approximation.entries()));
  return out;
}

// ---- descriptions ----

SpectralDescription describe(const SelfAdjointOperator& a, double cluster_tol) {
  if (!(cluster_tol > kValueMatchTol)) {
    throw ValidationError("cluster_tol",
                          "must exceed the value-match tolerance " + fmt(kValueMatchTol));
  }
  const Eigensystem sys = eigendecompose(a);
  std::vector<IsolatedPoint> isolated;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= sys.eigenvalues.size(); ++i) {
    if (i == sys.eigenvalues.size() ||
        sys.eigenvalues[i] - sys.eigenvalues[i - 1] > cluster_tol) {
      double sum = 0.0;
      for (std::size_t k = start; k < i; ++k) sum += sys.eigenvalues[k];
      isolated.push_back({sum / static_cast<double>(i - start),
                          static_cast<std::uint64_t>(i - start)});
      start = i;
    }
  }
  return SpectralDescription::make(std::move(isolated), {});
}

namespace {

// One spectral value with the dimension of its eigenspace.  Values inside a
// description are pairwise separated by more than kValueMatchTol, so matching
// within that tolerance across two descriptions is unambiguous.
struct SpectrumPoint {
  double value;
  bool essential;
  EigenMultiplicity eigen_dim;
};

std::vector<SpectrumPoint> merged_points(const SpectralDescription& d) {
  std::vector<SpectrumPoint> pts;
  for (const IsolatedPoint& p : d.isolated()) {
    pts.push_back({p.value, false, EigenMultiplicity::finite(p.multiplicity)});
  }
  for (const EssentialPoint& p : d.essential()) {
    pts.push_back({p.value, true, p.eigen_multiplicity});
  }
  std::sort(pts.begin(), pts.end(),
            [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.value < b.value; });
  return pts;
}

const SpectrumPoint* find_match(const std::vector<SpectrumPoint>& pts, double value) {
  for (const SpectrumPoint& p : pts) {
    if (std::fabs(p.value - value) <= kValueMatchTol) return &p;
  }
  return nullptr;
}

}  // namespace

bool spectrally_equivalent(const SpectralDescription& d1, const SpectralDescription& d2) {
  if (d1.isolated().size() != d2.isolated().size()) return false;
  if (d1.essential().size() != d2.essential().size()) return false;
  for (std::size_t i = 0; i < d1.isolated().size(); ++i) {
    const IsolatedPoint& p = d1.isolated()[i];
    const IsolatedPoint& q = d2.isolated()[i];
    if (std::fabs(p.value - q.value) > kValueMatchTol) return false;
    if (p.multiplicity != q.multiplicity) return false;
  }
  for (std::size_t i = 0; i < d1.essential().size(); ++i) {
    // Eigenspace dimensions are invisible to spectral equivalence.
    if (std::fabs(d1.essential()[i].value - d2.essential()[i].value) > kValueMatchTol) {
      return false;
    }
  }
  return true;
}

bool description_embeddable(const SpectralDescription& d1, const SpectralDescription& d2) {
  const auto pts1 = merged_points(d1);
  const auto pts2 = merged_points(d2);
  // Spectrum containment with eigenspace-dimension dominance.
  for (const SpectrumPoint& p : pts1) {
    const SpectrumPoint* q = find_match(pts2, p.value);
    if (q == nullptr) return false;
    if (!p.eigen_dim.dominated_by(q->eigen_dim)) return false;
  }
  // Essential spectrum containment.
  std::vector<SpectrumPoint> ess2;
  for (const SpectrumPoint& p : pts2) {
    if (p.essential) ess2.push_back(p);
  }
  for (const EssentialPoint& p : d1.essential()) {
    if (find_match(ess2, p.value) == nullptr) return false;
  }
  return true;
}

// ---- approximate unitary equivalence ----

OrthogonalMap approximate_unitary(const SelfAdjointOperator& a1,
                                  const SelfAdjointOperator& a2, double epsilon) {
  if (a1.dim() != a2.dim()) throw DimensionMismatch(a1.dim(), a2.dim());
  if (!(epsilon > 0.0)) throw ValidationError("epsilon", "must be positive");
  const std::size_t n = a1.dim();
  const Eigensystem e1 = eigendecompose(a1);
  const Eigensystem e2 = eigendecompose(a2);
  if (n == 0) return OrthogonalMap::identity(0);

  double scale = 1.0;
  for (double ev : e1.eigenvalues) scale = std::max(scale, std::fabs(ev));
  for (double ev : e2.eigenvalues) scale = std::max(scale, std::fabs(ev));

  // Joint ascending eigenvalue list; side = 0 for a1, 1 for a2.
  struct Tagged {
    double value;
    int side;
  };
  std::vector<Tagged> joint;
  joint.reserve(2 * n);
  for (double ev : e1.eigenvalues) joint.push_back({ev, 0});
  for (double ev : e2.eigenvalues) joint.push_back({ev, 1});
  std::sort(joint.begin(), joint.end(),
            [](const Tagged& a, const Tagged& b) { return a.value < b.value; });

  // Cluster at the eigendecomposition noise floor: values this close may be
  // the same true eigenvalue seen through two decompositions, so they must
  // never be separated by a cell boundary.
  const double glue = kEigenResidualTol * scale;
  struct Cluster {
    double lo, hi;
    std::size_t begin, end;  // indices into joint
  };
  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < joint.size();) {
    std::size_t j = i + 1;
    while (j < joint.size() && joint[j].value - joint[j - 1].value <= glue) ++j;
    clusters.push_back({joint[i].value, joint[j - 1].value, i, j});
    i = j;
  }

  // Group clusters into runs of span <= 0.6 * wmax, then pad runs into
  // disjoint half-open cells of width < epsilon.  Gaps between cells carry no
  // eigenvalues, so they contribute rank zero on both sides and are omitted.
  const double wmax = epsilon / 2.0;
  struct Run {
    double lo, hi;
    std::size_t begin, end;  // cluster index range
  };
  std::vector<Run> runs;
  for (std::size_t c = 0; c < clusters.size();) {
    std::size_t d = c + 1;
    while (d < clusters.size() && clusters[d].hi - clusters[c].lo <= 0.6 * wmax) ++d;
    runs.push_back({clusters[c].lo, clusters[d - 1].hi, c, d});
    c = d;
  }

  struct CellBound {
    double lo, hi;
    std::size_t run;
  };
  std::vector<CellBound> cells(runs.size());
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (r == 0) {
      cells[r].lo = runs[r].lo;  // the partition starts exactly at min(spectra)
    }
    if (r + 1 < runs.size()) {
      const double gap = runs[r + 1].lo - runs[r].hi;
      if (gap <= 0.2 * wmax) {
        const double boundary = 0.5 * (runs[r].hi + runs[r + 1].lo);
        cells[r].hi = boundary;
        cells[r + 1].lo = boundary;
      } else {
        cells[r].hi = runs[r].hi + 0.1 * wmax;
        cells[r + 1].lo = runs[r + 1].lo - 0.1 * wmax;
      }
    } else {
      cells[r].hi = runs[r].hi + wmax;  // reach M + epsilon/2
    }
    cells[r].run = r;
  }
  for (const CellBound& cell : cells) {
    if (!(cell.hi - cell.lo < epsilon)) {
      throw InternalContradiction("cell width " + fmt(cell.hi - cell.lo) +
                                  " does not stay below epsilon");
    }
  }

  // Ranks per cell must agree; the shared ascending order then matches the
  // spectra index by index, cell by cell.
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::size_t rank1 = 0;
    std::size_t rank2 = 0;
    for (std::size_t c = runs[r].begin; c < runs[r].end; ++c) {
      for (std::size_t i = clusters[c].begin; i < clusters[c].end; ++i) {
        (joint[i].side == 0 ? rank1 : rank2) += 1;
      }
    }
    if (rank1 != rank2) throw CellRankMismatch(r, rank1, rank2);
  }

  // U maps the k-th eigenvector of a1 onto the k-th eigenvector of a2; since
  // every cell has equal rank, paired eigenvalues share a cell of width
  // < epsilon, so ||A2 - U A1 U^T|| = max_k |lambda1_k - lambda2_k| < epsilon.
  const Matrix u = e2.basis.entries() * transpose(e1.basis.entries());
  OrthogonalMap witness = OrthogonalMap::from_rows(u);

  const Matrix conj = u * a1.entries() * transpose(u);
  const double residual = operator_norm(
      SelfAdjointOperator::from_rows(a2.entries() - symmetric_part(conj)));
  if (!(residual < epsilon)) {
    throw InternalContradiction("witness residual " + fmt(residual) +
                                " not below epsilon " + fmt(epsilon));
  }
  return witness;
}

ProjectionInvariant projection_pair_invariant(const SelfAdjointOperator& p, double tol) {
  if (!(tol > 0.0)) throw ValidationError("tol", "must be positive");
  const Matrix sq = p.entries() * p.entries();
  const double defect = operator_norm(
      SelfAdjointOperator::from_rows(symmetric_part(sq) - p.entries()));
  if (defect > tol) {
    throw NotAProjection("||P^2 - P|| = " + fmt(defect));
  }
  ProjectionInvariant inv;
  for (double ev : eigendecompose(p).eigenvalues) {
    // Idempotency within tol < 1/4 pins every eigenvalue near 0 or 1.
    (ev > 0.5 ? inv.rank : inv.corank) += 1;
  }
  return inv;
}

}  // namespace sbkit::symspec
