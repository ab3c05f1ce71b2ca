// apra.cpp

#include "sbkit/apra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sbkit::apra {

namespace {

// Cycles of pi touching [first, last), each listed from its lowest atom in
// orbit order; cycles sorted by lowest atom.
std::vector<std::vector<std::size_t>> cycles_in_range(const std::vector<std::size_t>& pi,
                                                      std::size_t first, std::size_t last) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(pi.size(), false);
  for (std::size_t x = first; x < last; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> cycle;
    std::size_t y = x;
    do {
      seen[y] = true;
      cycle.push_back(y);
      y = pi[y];
    } while (y != x);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

BlockedPermutationSystem BlockedPermutationSystem::make(std::vector<std::size_t> block_sizes,
                                                        std::vector<std::size_t> pi) {
  if (block_sizes.empty()) throw ValidationError("blocks", "no blocks");
  std::size_t n = 0;
  for (std::size_t s : block_sizes) {
    if (s == 0) throw ValidationError("blocks", "empty block");
    n += s;
  }
  if (pi.size() != n) {
    throw ValidationError("permutation", "pi has " + std::to_string(pi.size()) +
                                             " entries for " + std::to_string(n) + " atoms");
  }
  std::vector<bool> hit(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (pi[x] >= n || hit[pi[x]]) {
      throw ValidationError("permutation", "pi is not a bijection at atom " + std::to_string(x));
    }
    hit[pi[x]] = true;
  }
  std::size_t offset = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    const std::size_t end = offset + block_sizes[b];
    for (std::size_t x = offset; x < end; ++x) {
      if (pi[x] < offset || pi[x] >= end) {
        throw ValidationError("block invariance", "pi moves atom " + std::to_string(x) +
                                                      " out of block " + std::to_string(b));
      }
    }
    offset = end;
  }
  return BlockedPermutationSystem(std::move(block_sizes), std::move(pi));
}

std::pair<std::size_t, std::size_t> BlockedPermutationSystem::block_range(
    std::size_t block) const {
  std::size_t offset = 0;
  for (std::size_t b = 0; b < block; ++b) offset += block_sizes_[b];
  return {offset, offset + block_sizes_[block]};
}

Rat genericity_defect(const BlockedPermutationSystem& sys, std::size_t n) {
  if (n == 0) throw ValidationError("period", "must be >= 1");
  std::size_t fixed = 0;
  for (const auto& cycle : cycles_in_range(sys.pi(), 0, sys.size())) {
    if (n % cycle.size() == 0) fixed += cycle.size();
  }
  return Rat(fixed, sys.size());
}

TowerCertificate rokhlin_tower(const BlockedPermutationSystem& sys, std::size_t block,
                               std::size_t n, const Rat& eps) {
  if (block >= sys.block_count()) {
    throw ValidationError("block", "index " + std::to_string(block) + " out of range");
  }
  if (n == 0) throw ValidationError("height", "must be >= 1");
  if (eps < 0) throw ValidationError("eps", "must be >= 0");

  const auto [first, last] = sys.block_range(block);
  TowerCertificate cert;
  cert.block = block;
  cert.height = n;
  for (const auto& cycle : cycles_in_range(sys.pi(), first, last)) {
    // floor(L/n) tower rungs per cycle of length L is the optimum: the n
    // levels of a base atom occupy n distinct cycle positions.
    const std::size_t rungs = cycle.size() / n;
    for (std::size_t k = 0; k < rungs; ++k) cert.base.push_back(cycle[k * n]);
  }
  std::sort(cert.base.begin(), cert.base.end());
  cert.coverage = Rat(n * cert.base.size(), sys.size());

  const Rat relative(n * cert.base.size(), last - first);
  if (relative < 1 - eps) throw TowerDeficit(relative);
  return cert;
}

Rat uniform_distance(const BlockedPermutationSystem& t, const BlockedPermutationSystem& s) {
  if (!t.same_shape(s)) throw ShapeMismatch("block structures differ");
  std::size_t moved = 0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t.pi()[x] != s.pi()[x]) ++moved;
  }
  return Rat(moved, t.size());
}

SupDistanceResult sup_distance(const BlockedPermutationSystem& t,
                               const BlockedPermutationSystem& s) {
  if (!t.same_shape(s)) throw ShapeMismatch("block structures differ");
  const std::size_t n = t.size();

  if (n <= 16) {
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::uint32_t img_t = 0;
      std::uint32_t img_s = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (mask & (1u << x)) {
          img_t |= 1u << t.pi()[x];
          img_s |= 1u << s.pi()[x];
        }
      }
      best = std::max<std::size_t>(best, __builtin_popcount(img_t ^ img_s));
    }
    const Rat exact(best, n);
    return {exact, exact, true};
  }

  // Candidate sets give the lower bound; the upper bound is the disagreement
  // mass, since images can differ only where the permutations disagree.
  auto symm_diff = [&](const std::vector<bool>& a) {
    std::vector<bool> img_t(n, false), img_s(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (a[x]) {
        img_t[t.pi()[x]] = true;
        img_s[s.pi()[x]] = true;
      }
    }
    std::size_t count = 0;
    for (std::size_t x = 0; x < n; ++x) count += img_t[x] != img_s[x];
    return count;
  };

  std::size_t best = 0;
  std::vector<bool> disagree(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (t.pi()[x] != s.pi()[x]) {
      disagree[x] = true;
      std::vector<bool> single(n, false);
      single[x] = true;
      best = std::max(best, symm_diff(single));
    }
  }
  best = std::max(best, symm_diff(disagree));
  // Greedy growth from the disagreement set.
  std::vector<bool> grown = disagree;
  std::size_t grown_value = symm_diff(grown);
  for (std::size_t x = 0; x < n; ++x) {
    if (grown[x]) continue;
    grown[x] = true;
    const std::size_t candidate = symm_diff(grown);
    if (candidate > grown_value) {
      grown_value = candidate;
    } else {
      grown[x] = false;
    }
  }
  best = std::max(best, grown_value);

  std::size_t moved = 0;
  for (std::size_t x = 0; x < n; ++x) moved += disagree[x];
  Rat lower(best, n), upper(moved, n);
  const bool pinched = lower == upper;
  return {std::move(lower), std::move(upper), pinched};
}

BlockedPermutationSystem conjugate(const BlockedPermutationSystem& t,
                                   const std::vector<std::size_t>& phi) {
  const std::size_t n = t.size();
  if (phi.size() != n) throw ValidationError("conjugation", "phi size mismatch");
  std::vector<bool> seen(n, false);
  for (const std::size_t y : phi) {
    if (y >= n || seen[y]) throw ValidationError("conjugation", "phi is not a permutation");
    seen[y] = true;
  }
  std::vector<std::size_t> pi(n);
  for (std::size_t x = 0; x < n; ++x) pi[phi[x]] = phi[t.pi()[x]];
  // make() re-validates bijectivity and block invariance of the result.
  return BlockedPermutationSystem::make(t.block_sizes(), std::move(pi));
}

ConjugacyCertificate tower_conjugacy(const BlockedPermutationSystem& t,
                                     const BlockedPermutationSystem& s, std::size_t n,
                                     const Rat& eps) {
  if (!t.same_shape(s)) throw ShapeMismatch("block structures differ");
  if (n == 0) throw ValidationError("height", "must be >= 1");
  if (eps < 0) throw ValidationError("eps", "must be >= 0");

  const std::size_t total = t.size();
  std::vector<std::size_t> phi(total);

  for (std::size_t b = 0; b < t.block_count(); ++b) {
    // Block i (1-indexed) receives tower slack eps / 2^i; the slacks sum to
    // less than eps across all blocks.
    const Rat slack = eps / pow2(static_cast<unsigned>(b + 1));
    TowerCertificate tower_t = rokhlin_tower(t, b, n, slack);
    TowerCertificate tower_s = rokhlin_tower(s, b, n, slack);

    // Equalize base masses; bases are ascending, keep the lowest atoms.
    const std::size_t rungs = std::min(tower_t.base.size(), tower_s.base.size());
    tower_t.base.resize(rungs);
    tower_s.base.resize(rungs);

    const auto [first, last] = t.block_range(b);
    std::vector<bool> covered_t(total, false), covered_s(total, false);
    for (std::size_t k = 0; k < rungs; ++k) {
      std::size_t x = tower_t.base[k];
      std::size_t y = tower_s.base[k];
      for (std::size_t level = 0; level < n; ++level) {
        // Level j of the T-tower maps onto level j of the S-tower, so the
        // conjugated map agrees with S everywhere below the top level.
        phi[x] = y;
        covered_t[x] = true;
        covered_s[y] = true;
        x = t.pi()[x];
        y = s.pi()[y];
      }
    }
    std::vector<std::size_t> rest_t, rest_s;
    for (std::size_t x = first; x < last; ++x) {
      if (!covered_t[x]) rest_t.push_back(x);
      if (!covered_s[x]) rest_s.push_back(x);
    }
    for (std::size_t k = 0; k < rest_t.size(); ++k) phi[rest_t[k]] = rest_s[k];
  }

  ConjugacyCertificate cert;
  cert.phi = std::move(phi);
  cert.bound = Rat(1, n) + eps;
  cert.measured_distance = uniform_distance(conjugate(t, cert.phi), s);
  if (cert.measured_distance > cert.bound) {
    throw InternalContradiction("conjugacy distance " +
                                to_fraction_string(cert.measured_distance) +
                                " exceeds bound " + to_fraction_string(cert.bound));
  }
  return cert;
}

std::vector<ConjugacyCertificate> perturbation_sequence(
    const BlockedPermutationSystem& t, const BlockedPermutationSystem& s,
    const std::vector<std::pair<std::size_t, Rat>>& schedule) {
  if (schedule.empty()) throw BadSchedule("empty schedule");
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (schedule[k].first == 0) throw BadSchedule("height 0 at step " + std::to_string(k));
    if (k > 0) {
      const Rat prev = Rat(1, schedule[k - 1].first) + schedule[k - 1].second;
      const Rat curr = Rat(1, schedule[k].first) + schedule[k].second;
      if (!(curr < prev)) {
        throw BadSchedule("bounds do not strictly decrease at step " + std::to_string(k));
      }
    }
  }
  std::vector<ConjugacyCertificate> out;
  out.reserve(schedule.size());
  for (const auto& [n, eps] : schedule) out.push_back(tower_conjugacy(t, s, n, eps));
  return out;
}

}  // namespace sbkit::apra
