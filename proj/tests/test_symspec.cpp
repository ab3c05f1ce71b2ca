// test_symspec.cpp — eigensystems, functional calculus, spectral
// descriptions, and approximate unitary equivalence.  Numeric results are
// checked against closed-form oracles (2x2 quadratic formula, per-eigenvalue
// square roots) rather than against the code under test.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sbkit/symspec.hpp"
#include "support.hpp"

using namespace sbkit;
using namespace sbkit::symspec;

namespace {

SelfAdjointOperator op_from(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  Matrix m(n, n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const double v : row) m(i, j++) = v;
    ++i;
  }
  return SelfAdjointOperator::from_rows(m);
}

double reconstruct_residual(const SelfAdjointOperator& a, const Eigensystem& sys) {
  const std::size_t n = a.dim();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = sys.eigenvalues[i];
  const Matrix rebuilt = sys.basis.entries() * d * transpose(sys.basis.entries());
  return operator_norm(SelfAdjointOperator::from_rows(symmetric_part(a.entries() - rebuilt)));
}

}  // namespace

TEST_CASE("construction rejects visibly asymmetric input and repairs dust") {
  Matrix bad(2, 2);
  bad(0, 1) = 1.0;  // |a01 - a10| = 1
  CHECK_THROWS_AS(SelfAdjointOperator::from_rows(bad), ValidationError);

  Matrix dusty(2, 2);
  dusty(0, 1) = 1.0;
  dusty(1, 0) = 1.0 + 1e-12;
  const SelfAdjointOperator a = SelfAdjointOperator::from_rows(dusty);
  CHECK(a(0, 1) == a(1, 0));
}

TEST_CASE("orthogonal maps reject non-orthogonal input") {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;  // columns not unit length
  CHECK_THROWS_AS(OrthogonalMap::from_rows(m), ValidationError);
  CHECK(OrthogonalMap::identity(3).dim() == 3);
}

TEST_CASE("eigenvalues of 2x2 matrices match the quadratic formula") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = testsupport::random_symmetric(gen, 2, 5.0);
    const SelfAdjointOperator a = SelfAdjointOperator::from_rows(m);
    const auto [lo, hi] = testsupport::eigenvalues_2x2(m);
    const Eigensystem sys = eigendecompose(a);
    REQUIRE(sys.eigenvalues.size() == 2);
    CHECK(sys.eigenvalues[0] == doctest::Approx(lo).epsilon(1e-9));
    CHECK(sys.eigenvalues[1] == doctest::Approx(hi).epsilon(1e-9));
  }
}

TEST_CASE("eigendecomposition reconstructs the operator within tolerance") {
  std::mt19937 gen(12);
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const SelfAdjointOperator a =
          SelfAdjointOperator::from_rows(testsupport::random_symmetric(gen, dim, 3.0));
      const Eigensystem sys = eigendecompose(a);
      REQUIRE(sys.eigenvalues.size() == dim);
      CHECK(std::is_sorted(sys.eigenvalues.begin(), sys.eigenvalues.end()));
      CHECK(reconstruct_residual(a, sys) <=
            kEigenResidualTol * std::max(1.0, operator_norm(a)));
      const Matrix q = sys.basis.entries();
      CHECK(max_abs(transpose(q) * q - Matrix::identity(dim)) <= kOrthogonalityTol);
    }
  }
}

TEST_CASE("eigendecomposition recovers a planted spectrum") {
  std::mt19937 gen(13);
  const std::vector<double> planted{-3.0, -1.0, 0.0, 2.0, 2.0, 7.5};
  for (int trial = 0; trial < 20; ++trial) {
    const SelfAdjointOperator a = SelfAdjointOperator::from_rows(
        testsupport::random_with_spectrum(gen, planted));
    const Eigensystem sys = eigendecompose(a);
    for (std::size_t i = 0; i < planted.size(); ++i) {
      CHECK(sys.eigenvalues[i] == doctest::Approx(planted[i]).epsilon(1e-8));
    }
  }
}

TEST_CASE("operator norm is the largest absolute eigenvalue") {
  CHECK(operator_norm(SelfAdjointOperator::diagonal({-4.0, 1.0, 3.0})) == doctest::Approx(4.0));
  CHECK(operator_norm(SelfAdjointOperator::zero(3)) == doctest::Approx(0.0));
}

TEST_CASE("positive square root matches the per-eigenvalue root") {
  std::mt19937 gen(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + gen() % 6;
    std::uniform_real_distribution<double> dist(0.0, 4.0);
    std::vector<double> spec(dim);
    for (auto& v : spec) v = dist(gen);
    std::sort(spec.begin(), spec.end());

    const Matrix q = testsupport::random_orthogonal(gen, dim);
    Matrix lambda(dim, dim), root_lambda(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      lambda(i, i) = spec[i];
      root_lambda(i, i) = std::sqrt(spec[i]);
    }
    const SelfAdjointOperator a =
        SelfAdjointOperator::from_rows(symmetric_part(q * lambda * transpose(q)));
    const Matrix oracle = symmetric_part(q * root_lambda * transpose(q));

    const SelfAdjointOperator s = positive_sqrt(a);
    CHECK(operator_norm(SelfAdjointOperator::from_rows(
              symmetric_part(s.entries() - oracle))) <= 1e-6);
    CHECK(operator_norm(SelfAdjointOperator::from_rows(symmetric_part(
              s.entries() * s.entries() - a.entries()))) <=
          kSqrtResidualTol * std::max(1.0, operator_norm(a)));
  }
}

TEST_CASE("positive square root handles the zero operator and rejects negatives") {
  const SelfAdjointOperator z = positive_sqrt(SelfAdjointOperator::zero(3));
  CHECK(operator_norm(z) == 0.0);
  CHECK_THROWS_AS(positive_sqrt(SelfAdjointOperator::diagonal({1.0, -0.5})), NotPositive);
  // Negative dust within tolerance is clamped, not rejected.
  const SelfAdjointOperator s = positive_sqrt(SelfAdjointOperator::diagonal({1.0, -1e-11}));
  CHECK(operator_norm(s) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("absolute value squares back to the square") {
  const SelfAdjointOperator a = op_from({{1.0, 2.0}, {2.0, -3.0}});
  const SelfAdjointOperator abs_a = abs_operator(a);
  const double norm_gap = operator_norm(SelfAdjointOperator::from_rows(
      symmetric_part(abs_a.entries() * abs_a.entries() - a.entries() * a.entries())));
  CHECK(norm_gap <= kSqrtResidualTol * std::max(1.0, operator_norm(a) * operator_norm(a)));
  const Eigensystem sys = eigendecompose(abs_a);
  CHECK(sys.eigenvalues.front() >= -kEigenvalueTol);
}

TEST_CASE("positive projection splits the operator by sign") {
  std::mt19937 gen(15);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 2 + gen() % 5;
    const SelfAdjointOperator a =
        SelfAdjointOperator::from_rows(testsupport::random_symmetric(gen, dim, 2.0));
    const SelfAdjointOperator e = positive_projection(a);
    const Matrix em = e.entries();
    const double tol = kEigenvalueTol * std::max(1.0, operator_norm(a));

    // Idempotent and symmetric.
    CHECK(max_abs(em * em - em) <= tol);
    // A E+ is positive, A (I - E+) is negative.
    const Matrix pos = symmetric_part(a.entries() * em);
    const Matrix neg = symmetric_part(a.entries() * (Matrix::identity(dim) - em));
    const Eigensystem pos_sys = eigendecompose(SelfAdjointOperator::from_rows(pos));
    const Eigensystem neg_sys = eigendecompose(SelfAdjointOperator::from_rows(neg));
    CHECK(pos_sys.eigenvalues.front() >= -tol);
    CHECK(neg_sys.eigenvalues.back() <= tol);
    // Commutes with A.
    CHECK(max_abs(a.entries() * em - em * a.entries()) <= tol);
  }
}

TEST_CASE("spectral resolution is exact at the boundaries and monotone") {
  const SelfAdjointOperator a = SelfAdjointOperator::diagonal({-1.0, 0.5, 2.0});

  CHECK(max_abs(identity_decomposition(a, -1.0).entries()) == 0.0);
  CHECK(max_abs(identity_decomposition(a, -5.0).entries()) == 0.0);
  CHECK(max_abs(identity_decomposition(a, 2.5).entries() - Matrix::identity(3)) == 0.0);

  // Strictly-below semantics: lambda = 0.5 captures only the -1 eigenvector.
  const SelfAdjointOperator e = identity_decomposition(a, 0.5);
  CHECK(projection_pair_invariant(e, 1e-9).rank == 1);
  const SelfAdjointOperator f = identity_decomposition(a, 0.6);
  CHECK(projection_pair_invariant(f, 1e-9).rank == 2);
}

TEST_CASE("spectral riemann sums approximate within the mesh") {
  std::mt19937 gen(16);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 2 + gen() % 5;
    const SelfAdjointOperator a =
        SelfAdjointOperator::from_rows(testsupport::random_symmetric(gen, dim, 2.0));
    const Eigensystem sys = eigendecompose(a);
    const double lo = sys.eigenvalues.front() - 0.1;
    const double hi = sys.eigenvalues.back() + 0.1;
    for (const std::size_t cells : {4u, 16u, 64u}) {
      const RiemannPartition part = RiemannPartition::uniform(lo, hi, cells);
      const RiemannSum sum = spectral_riemann_sum(a, part);
      CHECK(sum.error <= part.mesh());
      CHECK(sum.error == doctest::Approx(operator_norm(SelfAdjointOperator::from_rows(
                             a.entries() - sum.approximation.entries()))));
    }
  }
}

TEST_CASE("riemann sums require the partition to cover the spectrum") {
  const SelfAdjointOperator a = SelfAdjointOperator::diagonal({0.0, 3.0});
  const RiemannPartition part = RiemannPartition::uniform(-1.0, 2.0, 6);
  CHECK_THROWS_AS(spectral_riemann_sum(a, part), PartitionDoesNotCoverSpectrum);
  // [lo, hi) is half open: an eigenvalue exactly at hi is not covered.
  const RiemannPartition half = RiemannPartition::uniform(-1.0, 3.0, 8);
  CHECK_THROWS_AS(spectral_riemann_sum(a, half), PartitionDoesNotCoverSpectrum);
}

TEST_CASE("partition construction validates cells") {
  using Cell = RiemannPartition::Cell;
  CHECK_THROWS_AS(RiemannPartition::make({}), ValidationError);
  CHECK_THROWS_AS(RiemannPartition::make({Cell{0.0, 1.0, 1.0}}), ValidationError);
  CHECK_THROWS_AS(RiemannPartition::make({Cell{0.0, 1.0, 0.5}, Cell{1.5, 2.0, 1.7}}),
                  ValidationError);
  const RiemannPartition ok =
      RiemannPartition::make({Cell{0.0, 1.0, 0.5}, Cell{1.0, 3.0, 1.0}});
  CHECK(ok.mesh() == doctest::Approx(2.0));
}

TEST_CASE("describe clusters eigenvalues by gap") {
  const SelfAdjointOperator a =
      SelfAdjointOperator::diagonal({1.0, 1.0 + 1e-12, 2.0, 5.0, 5.0, 5.0});
  const SpectralDescription d = describe(a, 0.5);
  REQUIRE(d.isolated().size() == 3);
  CHECK(d.essential().empty());
  CHECK(d.isolated()[0].value == doctest::Approx(1.0));
  CHECK(d.isolated()[0].multiplicity == 2);
  CHECK(d.isolated()[1].multiplicity == 1);
  CHECK(d.isolated()[2].value == doctest::Approx(5.0));
  CHECK(d.isolated()[2].multiplicity == 3);

  CHECK_THROWS_AS(describe(a, 0.0), ValidationError);
}

TEST_CASE("descriptions validate separation and multiplicities") {
  CHECK_THROWS_AS(SpectralDescription::make({IsolatedPoint{1.0, 0}}, {}), ValidationError);
  CHECK_THROWS_AS(
      SpectralDescription::make({IsolatedPoint{1.0, 1}, IsolatedPoint{1.0 + 1e-10, 1}}, {}),
      ValidationError);
  // A value may not sit in both lists.
  CHECK_THROWS_AS(SpectralDescription::make({IsolatedPoint{1.0, 1}},
                                            {EssentialPoint{1.0, EigenMultiplicity::inf()}}),
                  ValidationError);
  const SpectralDescription d = SpectralDescription::make(
      {IsolatedPoint{2.0, 1}, IsolatedPoint{-1.0, 3}},
      {EssentialPoint{0.0, EigenMultiplicity::finite(0)}});
  CHECK(d.isolated().front().value == -1.0);  // sorted ascending
}

TEST_CASE("spectral equivalence ignores essential eigenspace dimensions") {
  const auto ess_inf = SpectralDescription::make(
      {IsolatedPoint{1.0, 2}}, {EssentialPoint{0.0, EigenMultiplicity::inf()}});
  const auto ess_zero = SpectralDescription::make(
      {IsolatedPoint{1.0, 2}}, {EssentialPoint{0.0, EigenMultiplicity::finite(0)}});
  CHECK(spectrally_equivalent(ess_inf, ess_zero));
  CHECK(spectrally_equivalent(ess_inf, ess_inf));

  const auto different_mult = SpectralDescription::make(
      {IsolatedPoint{1.0, 3}}, {EssentialPoint{0.0, EigenMultiplicity::inf()}});
  CHECK_FALSE(spectrally_equivalent(ess_inf, different_mult));
  const auto moved_value = SpectralDescription::make(
      {IsolatedPoint{1.5, 2}}, {EssentialPoint{0.0, EigenMultiplicity::inf()}});
  CHECK_FALSE(spectrally_equivalent(ess_inf, moved_value));
}

TEST_CASE("embeddability requires containment and dimension dominance") {
  const auto small = SpectralDescription::make({IsolatedPoint{1.0, 1}}, {});
  const auto large = SpectralDescription::make(
      {IsolatedPoint{1.0, 2}, IsolatedPoint{3.0, 1}}, {});
  CHECK(description_embeddable(small, large));
  CHECK_FALSE(description_embeddable(large, small));

  // An isolated point can land on an essential point with infinite eigenspace.
  const auto ess = SpectralDescription::make(
      {}, {EssentialPoint{1.0, EigenMultiplicity::inf()}});
  CHECK(description_embeddable(small, ess));
  // But not on an essential point with a zero-dimensional eigenspace.
  const auto hollow = SpectralDescription::make(
      {}, {EssentialPoint{1.0, EigenMultiplicity::finite(0)}});
  CHECK_FALSE(description_embeddable(small, hollow));
  // Essential spectrum must land inside essential spectrum.
  CHECK_FALSE(description_embeddable(ess, small));
}

TEST_CASE("bidirectional embeddability coincides with equivalence across a family") {
  // All descriptions over values {0, 1, 2} where each value is absent,
  // isolated with multiplicity 1 or 2, or essential with eigenspace 0 or inf.
  std::vector<SpectralDescription> family;
  for (int c0 = 0; c0 < 5; ++c0) {
    for (int c1 = 0; c1 < 5; ++c1) {
      for (int c2 = 0; c2 < 5; ++c2) {
        const int code[3] = {c0, c1, c2};
        std::vector<IsolatedPoint> iso;
        std::vector<EssentialPoint> ess;
        bool empty = true;
        for (int v = 0; v < 3; ++v) {
          const double value = static_cast<double>(v);
          switch (code[v]) {
            case 0: break;
            case 1: iso.push_back({value, 1}); empty = false; break;
            case 2: iso.push_back({value, 2}); empty = false; break;
            case 3: ess.push_back({value, EigenMultiplicity::finite(0)}); empty = false; break;
            default: ess.push_back({value, EigenMultiplicity::inf()}); empty = false; break;
          }
        }
        if (empty) continue;  // a spectrum is nonempty
        family.push_back(SpectralDescription::make(std::move(iso), std::move(ess)));
      }
    }
  }
  REQUIRE(family.size() == 124);

  std::size_t mutual = 0;
  for (const auto& d1 : family) {
    for (const auto& d2 : family) {
      const bool fwd = description_embeddable(d1, d2);
      const bool bwd = description_embeddable(d2, d1);
      const bool eq = spectrally_equivalent(d1, d2);
      if (fwd && bwd) {
        ++mutual;
        CHECK(eq);
      }
      if (d1 == d2) {
        CHECK(fwd);
        CHECK(eq);
      }
    }
  }
  CHECK(mutual >= family.size());  // at least the diagonal
}

TEST_CASE("approximate unitary equivalence of a conjugated pair") {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t dim = 2 + gen() % 6;
    const SelfAdjointOperator a1 =
        SelfAdjointOperator::from_rows(testsupport::random_symmetric(gen, dim, 2.0));
    const Matrix q = testsupport::random_orthogonal(gen, dim);
    const SelfAdjointOperator a2 = SelfAdjointOperator::from_rows(
        symmetric_part(q * a1.entries() * transpose(q)));
    for (const double eps : {1e-2, 1e-6}) {
      const OrthogonalMap u = approximate_unitary(a1, a2, eps);
      const Matrix moved = u.entries() * a1.entries() * transpose(u.entries());
      const double residual = operator_norm(
          SelfAdjointOperator::from_rows(symmetric_part(a2.entries() - moved)));
      CHECK(residual < eps);
    }
  }
}

TEST_CASE("approximate unitary equivalence matches nearby but unequal spectra") {
  // Spectra {0, 1} and {0, 1 + eps/4} differ by less than the cell width.
  const double eps = 1e-3;
  const SelfAdjointOperator a1 = SelfAdjointOperator::diagonal({0.0, 1.0});
  const SelfAdjointOperator a2 = SelfAdjointOperator::diagonal({0.0, 1.0 + eps / 4});
  const OrthogonalMap u = approximate_unitary(a1, a2, eps);
  const Matrix moved = u.entries() * a1.entries() * transpose(u.entries());
  CHECK(operator_norm(SelfAdjointOperator::from_rows(
            symmetric_part(a2.entries() - moved))) < eps);
}

TEST_CASE("approximate unitary equivalence reports the obstructing cell") {
  const SelfAdjointOperator a1 = SelfAdjointOperator::diagonal({1.0, 2.0});
  const SelfAdjointOperator a2 = SelfAdjointOperator::diagonal({1.0, 3.0});
  try {
    approximate_unitary(a1, a2, 0.5);
    FAIL("expected CellRankMismatch");
  } catch (const CellRankMismatch& e) {
    CHECK(e.rank_left() != e.rank_right());
  }

  CHECK_THROWS_AS(approximate_unitary(a1, SelfAdjointOperator::identity(3), 0.5),
                  DimensionMismatch);
  CHECK_THROWS_AS(approximate_unitary(a1, a2, 0.0), ValidationError);
}

TEST_CASE("projection classification by rank and corank") {
  const SelfAdjointOperator p = SelfAdjointOperator::diagonal({1.0, 1.0, 0.0});
  const ProjectionInvariant inv = projection_pair_invariant(p, 1e-9);
  CHECK(inv.rank == 2);
  CHECK(inv.corank == 1);

  // Unitarily conjugated projections share the invariant.
  std::mt19937 gen(18);
  const Matrix q = testsupport::random_orthogonal(gen, 3);
  const SelfAdjointOperator conj = SelfAdjointOperator::from_rows(
      symmetric_part(q * p.entries() * transpose(q)));
  CHECK(projection_pair_invariant(conj, 1e-6) == inv);

  CHECK_THROWS_AS(projection_pair_invariant(SelfAdjointOperator::diagonal({0.5, 1.0}), 1e-9),
                  NotAProjection);
}
