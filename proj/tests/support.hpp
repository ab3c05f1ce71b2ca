// support.hpp — seeded random generators and tiny closed-form oracles shared
// by the test binaries.  Everything here is deliberately naive: the point is
// independence from the library's own numerics.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "sbkit/dense.hpp"
#include "sbkit/symspec.hpp"

namespace testsupport {

inline sbkit::Matrix random_symmetric(std::mt19937& gen, std::size_t dim,
                                      double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  sbkit::Matrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const double v = dist(gen);
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

// Gram-Schmidt on a random square matrix; redraws on near-dependence, so the
// result is orthogonal to machine precision.
inline sbkit::Matrix random_orthogonal(std::mt19937& gen, std::size_t dim) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  sbkit::Matrix q(dim, dim);
  for (std::size_t col = 0; col < dim;) {
    std::vector<double> v(dim);
    for (auto& x : v) x = dist(gen);
    for (std::size_t prev = 0; prev < col; ++prev) {
      double dot = 0.0;
      for (std::size_t i = 0; i < dim; ++i) dot += v[i] * q(i, prev);
      for (std::size_t i = 0; i < dim; ++i) v[i] -= dot * q(i, prev);
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;  // redraw
    for (std::size_t i = 0; i < dim; ++i) q(i, col) = v[i] / norm;
    ++col;
  }
  return q;
}

// Q diag(d) Q^T for a fresh random orthogonal Q.
inline sbkit::Matrix random_with_spectrum(std::mt19937& gen, const std::vector<double>& d) {
  const std::size_t dim = d.size();
  const sbkit::Matrix q = random_orthogonal(gen, dim);
  sbkit::Matrix lambda(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) lambda(i, i) = d[i];
  return sbkit::symmetric_part(q * lambda * sbkit::transpose(q));
}

// Eigenvalues of a symmetric 2x2 matrix by the quadratic formula, ascending.
inline std::pair<double, double> eigenvalues_2x2(const sbkit::Matrix& a) {
  const double mean = (a(0, 0) + a(1, 1)) / 2.0;
  const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const double disc = std::sqrt(std::max(0.0, mean * mean - det));
  return {mean - disc, mean + disc};
}

// Random permutation of {0..n-1}.
inline std::vector<std::size_t> random_permutation(std::mt19937& gen, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), gen);
  return p;
}

// Random permutation fixing each consecutive block of the given sizes.
inline std::vector<std::size_t> random_blocked_permutation(
    std::mt19937& gen, const std::vector<std::size_t>& block_sizes) {
  std::vector<std::size_t> pi;
  std::size_t offset = 0;
  for (const std::size_t size : block_sizes) {
    const std::vector<std::size_t> local = random_permutation(gen, size);
    for (std::size_t i = 0; i < size; ++i) pi.push_back(offset + local[i]);
    offset += size;
  }
  return pi;
}

}  // namespace testsupport
