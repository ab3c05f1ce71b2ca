// randomization.cpp

#include "sbkit/randomization.hpp"

#include <algorithm>
#include <set>

namespace sbkit::randomization {

namespace {

void check_catalogs_match(const DensityProfile& p, const DensityProfile& q) {
  if (!(p.catalog == q.catalog)) {
    throw CatalogMismatch("profiles live over different catalogs");
  }
}

Rat mass_on(const DensityProfile& p, std::uint32_t member_mask) {
  Rat total = 0;
  for (std::size_t i = 0; i < p.rho.size(); ++i) {
    if (member_mask & (1u << i)) total += p.rho[i];
  }
  return total;
}

}  // namespace

bool validate_catalog(const ModelCatalog& catalog) {
  const std::size_t n = catalog.ids.size();
  if (n == 0) throw ValidationError("ids", "catalog is empty");
  std::set<std::string> distinct(catalog.ids.begin(), catalog.ids.end());
  if (distinct.size() != n) throw ValidationError("ids", "duplicate identifier");
  if (catalog.embeds.size() != n) {
    throw ValidationError("embeds shape", "row count differs from id count");
  }
  for (const auto& row : catalog.embeds) {
    if (row.size() != n) {
      throw ValidationError("embeds shape", "column count differs from id count");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!catalog.embeds[i][i]) {
      throw NotAPreorder("relation is not reflexive at '" + catalog.ids[i] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!catalog.embeds[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (catalog.embeds[j][k] && !catalog.embeds[i][k]) {
          throw NotAPreorder("relation is not transitive at '" + catalog.ids[i] + "' -> '" +
                             catalog.ids[j] + "' -> '" + catalog.ids[k] + "'");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (catalog.embeds[i][j] && catalog.embeds[j][i]) return false;
    }
  }
  return true;
}

std::vector<std::string> linear_extension(const ModelCatalog& catalog) {
  if (!validate_catalog(catalog)) {
    throw NotAPartialOrder("mutually embeddable distinct models");
  }
  const std::size_t n = catalog.ids.size();
  std::vector<bool> emitted(n, false);
  std::vector<std::string> out;
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::size_t> ready;
    for (std::size_t j = 0; j < n; ++j) {
      if (emitted[j]) continue;
      bool blocked = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!emitted[i] && i != j && catalog.embeds[i][j]) blocked = true;
      }
      if (!blocked) ready.push_back(j);
    }
    // Prefer a prime candidate: one embedding into every remaining model.
    // Antisymmetry makes it unique when it exists.
    std::size_t pick = ready.front();
    bool found_prime = false;
    for (std::size_t j : ready) {
      bool prime = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (!emitted[k] && !catalog.embeds[j][k]) prime = false;
      }
      if (prime) {
        pick = j;
        found_prime = true;
        break;
      }
    }
    if (!found_prime) {
      for (std::size_t j : ready) {
        if (catalog.ids[j] < catalog.ids[pick]) pick = j;
      }
    }
    emitted[pick] = true;
    out.push_back(catalog.ids[pick]);
  }
  return out;
}

DensityProfile make_profile(ModelCatalog catalog, std::vector<Rat> rho) {
  validate_catalog(catalog);
  if (rho.size() != catalog.ids.size()) {
    throw ValidationError("unit mass", "one mass per model required");
  }
  Rat total = 0;
  for (const Rat& r : rho) {
    if (r < 0) throw ValidationError("unit mass", "negative mass " + to_fraction_string(r));
    total += r;
  }
  if (total != 1) {
    throw ValidationError("unit mass", "total mass " + to_fraction_string(total));
  }
  return DensityProfile{std::move(catalog), std::move(rho)};
}

bool upset_dominance_embeddable(const DensityProfile& p, const DensityProfile& q) {
  check_catalogs_match(p, q);
  validate_catalog(p.catalog);
  const std::size_t n = p.catalog.ids.size();

  if (n > 20) {
    // Too many up-sets to enumerate; transport feasibility decides the same
    // predicate by max-flow duality.
    return flow_embeddable(p, q).has_value();
  }

  std::vector<std::uint32_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.catalog.embeds[i][j]) up[i] |= 1u << j;
    }
  }
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if ((mask & (1u << i)) && (up[i] & ~mask) != 0) closed = false;
    }
    if (!closed) continue;
    if (mass_on(p, mask) > mass_on(q, mask)) return false;
  }
  return true;
}

std::optional<flow::TransportPlan> flow_embeddable(const DensityProfile& p,
                                                   const DensityProfile& q) {
  check_catalogs_match(p, q);
  validate_catalog(p.catalog);
  return flow::solve_transport(p.rho, q.rho, [&](std::size_t i, std::size_t j) {
    return static_cast<bool>(p.catalog.embeds[i][j]);
  });
}

Verdict sb_decide_randomization(const DensityProfile& p, const DensityProfile& q) {
  check_catalogs_match(p, q);
  const bool partial_order = validate_catalog(p.catalog);
  const bool forward = upset_dominance_embeddable(p, q);
  const bool backward = upset_dominance_embeddable(q, p);
  const bool equal = p.rho == q.rho;
  if (equal && !(forward && backward)) {
    throw InternalContradiction("equal profiles failed a dominance check");
  }
  if (forward && backward) {
    if (equal) return Verdict::Isomorphic;
    if (partial_order) {
      // Over a partial order, equality on all up-sets recovers each mass by
      // downward induction, so this branch is a theorem violation.
      throw InternalContradiction("mutually dominant profiles differ over a partial order");
    }
    return Verdict::SBFailureWitness;
  }
  if (forward) return Verdict::EmbedsOnlyForward;
  if (backward) return Verdict::EmbedsOnlyBackward;
  return Verdict::Incomparable;
}

MutualEmbeddingCounterexample dlo_counterexample() {
  // Two countable dense linear orders assembled as different stacks of the
  // rationals and the reals; each order-embeds into the other, but they are
  // not isomorphic, so the catalog is a preorder with a two-element mutual
  // class.
  ModelCatalog catalog;
  catalog.ids = {"dlo_q_then_r", "dlo_r_then_q"};
  catalog.embeds = {{true, true}, {true, true}};
  DensityProfile left = make_profile(catalog, {Rat(1), Rat(0)});
  DensityProfile right = make_profile(catalog, {Rat(0), Rat(1)});
  return {std::move(catalog), std::move(left), std::move(right)};
}

}  // namespace sbkit::randomization
