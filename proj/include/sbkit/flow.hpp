// flow.hpp — exact-rational transportation feasibility via max-flow.  Used as
// the independent cross-check against combinatorial dominance criteria, so it
// deliberately shares no logic with them.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sbkit/rational.hpp"

namespace sbkit::flow {

struct PlanEntry {
  std::size_t source = 0;
  std::size_t target = 0;
  Rat amount;

  bool operator==(const PlanEntry&) const = default;
};

// Mass routed from supply slots to demand slots along allowed arcs.  Entries
// carry strictly positive amounts and are sorted by (source, target).
struct TransportPlan {
  std::vector<PlanEntry> entries;

  bool operator==(const TransportPlan&) const = default;
};

// Finds a plan whose row sums equal `supply`, whose column sums equal
// `demand`, and whose support lies inside `arc`.  Returns nothing when no such
// plan exists (including when the two totals differ).  All supplies and
// demands must be nonnegative.  Deterministic: Edmonds-Karp with fixed vertex
// order.
std::optional<TransportPlan> solve_transport(
    const std::vector<Rat>& supply, const std::vector<Rat>& demand,
    const std::function<bool(std::size_t, std::size_t)>& arc);

// True iff `plan` routes exactly `supply` to exactly `demand` over `arc`.
bool plan_is_valid(const TransportPlan& plan, const std::vector<Rat>& supply,
                   const std::vector<Rat>& demand,
                   const std::function<bool(std::size_t, std::size_t)>& arc);

}  // namespace sbkit::flow
