// maharam.cpp

#include "sbkit/maharam.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sbkit::maharam {

namespace {

void require_normalized(const MaharamInvariant& inv, const char* who) {
  if (!is_normalized(inv)) {
    throw ValidationError("normalized", std::string(who) + " invariant is not in normal form");
  }
}

Rat total_mass(const MaharamInvariant& inv) {
  Rat t = 0;
  for (const Rat& a : inv.atoms) t += a;
  for (const Block& b : inv.blocks) t += b.weight;
  return t;
}

// Mass on blocks of degree >= kappa.
Rat tail_sum(const MaharamInvariant& inv, CardinalCode kappa) {
  Rat t = 0;
  for (const Block& b : inv.blocks) {
    if (b.kappa >= kappa) t += b.weight;
  }
  return t;
}

}  // namespace

MaharamInvariant normalize(const MaharamInvariant& inv) {
  for (const Rat& a : inv.atoms) {
    if (a <= 0) throw ValidationError("positive weight", "atom weight " + to_fraction_string(a));
  }
  for (const Block& b : inv.blocks) {
    if (b.weight <= 0) {
      throw ValidationError("positive weight", "block weight " + to_fraction_string(b.weight));
    }
  }
  const Rat total = total_mass(inv);
  if (total != 1) {
    throw BadTotalMass("total mass " + to_fraction_string(total));
  }

  MaharamInvariant out;
  out.atoms = inv.atoms;
  std::sort(out.atoms.begin(), out.atoms.end(), std::greater<Rat>());

  std::vector<Block> blocks = inv.blocks;
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    return y.kappa < x.kappa;
  });
  for (const Block& b : blocks) {
    if (!out.blocks.empty() && out.blocks.back().kappa == b.kappa) {
      out.blocks.back().weight += b.weight;
    } else {
      out.blocks.push_back(b);
    }
  }
  return out;
}

bool is_normalized(const MaharamInvariant& inv) {
  for (const Rat& a : inv.atoms) {
    if (a <= 0) return false;
  }
  for (std::size_t i = 1; i < inv.atoms.size(); ++i) {
    if (inv.atoms[i] > inv.atoms[i - 1]) return false;
  }
  for (const Block& b : inv.blocks) {
    if (b.weight <= 0) return false;
  }
  for (std::size_t i = 1; i < inv.blocks.size(); ++i) {
    if (!(inv.blocks[i].kappa < inv.blocks[i - 1].kappa)) return false;
  }
  return total_mass(inv) == 1;
}

bool is_isomorphic(const MaharamInvariant& a, const MaharamInvariant& b) {
  require_normalized(a, "left");
  require_normalized(b, "right");
  return a == b;
}

bool tail_dominance_embeddable(const MaharamInvariant& a, const MaharamInvariant& b) {
  require_normalized(a, "left");
  require_normalized(b, "right");
  if (a.atoms != b.atoms) return false;
  std::set<CardinalCode> kappas;
  for (const Block& blk : a.blocks) kappas.insert(blk.kappa);
  for (const Block& blk : b.blocks) kappas.insert(blk.kappa);
  for (CardinalCode kappa : kappas) {
    if (tail_sum(a, kappa) > tail_sum(b, kappa)) return false;
  }
  return true;
}

std::optional<flow::TransportPlan> flow_embeddable(const MaharamInvariant& a,
                                                   const MaharamInvariant& b) {
  require_normalized(a, "left");
  require_normalized(b, "right");
  if (a.atoms != b.atoms) {
    throw AtomMismatch("atom lists differ (" + std::to_string(a.atoms.size()) + " vs " +
                       std::to_string(b.atoms.size()) + " atoms)");
  }
  std::vector<Rat> supply;
  for (const Block& blk : a.blocks) supply.push_back(blk.weight);
  std::vector<Rat> demand;
  for (const Block& blk : b.blocks) demand.push_back(blk.weight);
  return flow::solve_transport(supply, demand, [&](std::size_t i, std::size_t j) {
    return a.blocks[i].kappa <= b.blocks[j].kappa;
  });
}

Verdict sb_decide(const MaharamInvariant& a, const MaharamInvariant& b) {
  const bool forward = tail_dominance_embeddable(a, b);
  const bool backward = tail_dominance_embeddable(b, a);
  const bool equal = is_isomorphic(a, b);
  if (equal && !(forward && backward)) {
    throw InternalContradiction("equal invariants failed a dominance check");
  }
  if (forward && backward) {
    // Mutual dominance pins every tail sum, hence the whole invariant.
    if (!equal) {
      throw InternalContradiction("mutually embeddable invariants are not equal");
    }
    return Verdict::Isomorphic;
  }
  if (forward) return Verdict::EmbedsOnlyForward;
  if (backward) return Verdict::EmbedsOnlyBackward;
  return Verdict::Incomparable;
}

}  // namespace sbkit::maharam
