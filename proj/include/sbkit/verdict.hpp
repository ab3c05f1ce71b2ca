// verdict.hpp — outcome of a two-sided embeddability comparison.

#pragma once

#include <stdexcept>
#include <string>

namespace sbkit {

enum class Verdict {
  Isomorphic,
  EmbedsOnlyForward,
  EmbedsOnlyBackward,
  Incomparable,
  // Both sides embed into each other yet they are not isomorphic; only
  // reachable when the underlying comparison is a genuine preorder.
  SBFailureWitness,
};

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Isomorphic: return "Isomorphic";
    case Verdict::EmbedsOnlyForward: return "EmbedsOnlyForward";
    case Verdict::EmbedsOnlyBackward: return "EmbedsOnlyBackward";
    case Verdict::Incomparable: return "Incomparable";
    case Verdict::SBFailureWitness: return "SBFailureWitness";
  }
  throw std::logic_error("unreachable verdict");
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "Isomorphic") return Verdict::Isomorphic;
  if (s == "EmbedsOnlyForward") return Verdict::EmbedsOnlyForward;
  if (s == "EmbedsOnlyBackward") return Verdict::EmbedsOnlyBackward;
  if (s == "Incomparable") return Verdict::Incomparable;
  if (s == "SBFailureWitness") return Verdict::SBFailureWitness;
  throw std::invalid_argument("unknown verdict: '" + s + "'");
}

}  // namespace sbkit
