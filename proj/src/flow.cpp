// flow.cpp — dense Edmonds-Karp over exact rationals.  Node layout:
// 0 = source, 1..ns = supply slots, ns+1..ns+nd = demand slots, last = sink.

#include "sbkit/flow.hpp"

#include <algorithm>
#include <queue>

namespace sbkit::flow {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

std::optional<TransportPlan> solve_transport(
    const std::vector<Rat>& supply, const std::vector<Rat>& demand,
    const std::function<bool(std::size_t, std::size_t)>& arc) {
  const std::size_t ns = supply.size();
  const std::size_t nd = demand.size();

  Rat total_supply = 0;
  for (const Rat& s : supply) total_supply += s;
  Rat total_demand = 0;
  for (const Rat& d : demand) total_demand += d;
  if (total_supply != total_demand) return std::nullopt;

  const std::size_t n = ns + nd + 2;
  const std::size_t src = 0;
  const std::size_t snk = n - 1;
  // residual[u][v]: remaining capacity.  Interior arcs get capacity
  // total_supply, an upper bound no feasible routing can exceed.
  std::vector<std::vector<Rat>> residual(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < ns; ++i) residual[src][1 + i] = supply[i];
  for (std::size_t j = 0; j < nd; ++j) residual[1 + ns + j][snk] = demand[j];
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < nd; ++j)
      if (arc(i, j)) residual[1 + i][1 + ns + j] = total_supply;

  Rat flow = 0;
  while (true) {
    std::vector<std::size_t> parent(n, kNone);
    parent[src] = src;
    std::queue<std::size_t> bfs;
    bfs.push(src);
    while (!bfs.empty() && parent[snk] == kNone) {
      const std::size_t u = bfs.front();
      bfs.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] == kNone && residual[u][v] > 0) {
          parent[v] = u;
          bfs.push(v);
        }
      }
    }
    if (parent[snk] == kNone) break;

    Rat push = residual[parent[snk]][snk];
    for (std::size_t v = snk; v != src; v = parent[v]) {
      push = std::min(push, residual[parent[v]][v]);
    }
    for (std::size_t v = snk; v != src; v = parent[v]) {
      residual[parent[v]][v] -= push;
      residual[v][parent[v]] += push;
    }
    flow += push;
  }

  if (flow != total_supply) return std::nullopt;

  TransportPlan plan;
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nd; ++j) {
      if (!arc(i, j)) continue;
      // Flow on an interior arc equals the reverse residual it accumulated.
      const Rat& sent = residual[1 + ns + j][1 + i];
      if (sent > 0) plan.entries.push_back({i, j, sent});
    }
  }
  std::sort(plan.entries.begin(), plan.entries.end(),
            [](const PlanEntry& a, const PlanEntry& b) {
              return a.source != b.source ? a.source < b.source : a.target < b.target;
            });
  return plan;
}

bool plan_is_valid(const TransportPlan& plan, const std::vector<Rat>& supply,
                   const std::vector<Rat>& demand,
                   const std::function<bool(std::size_t, std::size_t)>& arc) {
  std::vector<Rat> row(supply.size(), Rat(0));
  std::vector<Rat> col(demand.size(), Rat(0));
  for (const PlanEntry& e : plan.entries) {
    if (e.source >= supply.size() || e.target >= demand.size()) return false;
    if (e.amount <= 0) return false;
    if (!arc(e.source, e.target)) return false;
    row[e.source] += e.amount;
    col[e.target] += e.amount;
  }
  return row == supply && col == demand;
}

}  // namespace sbkit::flow
