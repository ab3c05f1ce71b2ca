// cli.cpp — job dispatch and certificate verification.  run() computes a
// result plus a witness; verify_certificate() re-derives every claim from the
// embedded job and the witness alone, so the two sides stay independent: run
// searches, verify only checks.

#include "sbkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace sbkit::cli {

namespace {

constexpr const char* kFormatVersion = "v1";

constexpr const char* kVerdictUnitary = "ApproximatelyUnitarilyEquivalent";
constexpr const char* kVerdictEquivalent = "SpectrallyEquivalent";
constexpr const char* kVerdictConjugate = "ApproximatelyConjugate";

json bound_entry(const std::string& claim, json value) {
  return json{{"claim", claim}, {"value", std::move(value)}};
}

// claim -> value, rejecting duplicates and malformed entries.
std::map<std::string, json> bounds_map(const json& bounds) {
  if (!bounds.is_array()) throw ParseError("bounds", "expected an array");
  std::map<std::string, json> out;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const std::string path = "bounds[" + std::to_string(i) + "]";
    const std::string claim =
        serialize::string_at(serialize::member(bounds[i], "claim", path), path + ".claim");
    const json& value = serialize::member(bounds[i], "value", path);
    if (!out.emplace(claim, value).second) {
      throw ParseError(path, "duplicate claim '" + claim + "'");
    }
  }
  return out;
}

std::string descriptions_verdict(bool equivalent, bool forward, bool backward) {
  if (equivalent) return kVerdictEquivalent;
  if (forward && backward) {
    throw InternalContradiction("bi-embeddable descriptions failed equivalence");
  }
  if (forward) return to_string(Verdict::EmbedsOnlyForward);
  if (backward) return to_string(Verdict::EmbedsOnlyBackward);
  return to_string(Verdict::Incomparable);
}

Rat plan_mass(const flow::TransportPlan& plan) {
  Rat total = 0;
  for (const auto& e : plan.entries) total += e.amount;
  return total;
}

}  // namespace

std::string to_string(JobKind kind) {
  switch (kind) {
    case JobKind::Operators: return "operators";
    case JobKind::Descriptions: return "descriptions";
    case JobKind::Algebras: return "algebras";
    case JobKind::Automorphisms: return "automorphisms";
    case JobKind::Randomizations: return "randomizations";
  }
  throw std::logic_error("unreachable kind");
}

JobKind kind_from_string(const std::string& name) {
  if (name == "operators") return JobKind::Operators;
  if (name == "descriptions") return JobKind::Descriptions;
  if (name == "algebras") return JobKind::Algebras;
  if (name == "automorphisms") return JobKind::Automorphisms;
  if (name == "randomizations") return JobKind::Randomizations;
  throw ParseError("kind", "unknown kind '" + name + "'");
}

Job parse_job(const json& doc) {
  const JobKind kind = kind_from_string(
      serialize::string_at(serialize::member(doc, "kind", "job"), "kind"));
  const json& left = serialize::member(doc, "left", "job");
  const json& right = serialize::member(doc, "right", "job");
  json parameters = json::object();
  if (doc.contains("parameters")) {
    if (!doc.at("parameters").is_object()) {
      throw ParseError("parameters", "expected an object");
    }
    parameters = doc.at("parameters");
  }

  switch (kind) {
    case JobKind::Operators: {
      OperatorsPayload p{serialize::parse_operator(left, "left"),
                         serialize::parse_operator(right, "right"), 0.0};
      if (!parameters.contains("epsilon")) {
        throw ValidationError("epsilon", "operators jobs require parameters.epsilon");
      }
      p.epsilon = serialize::number_at(parameters.at("epsilon"), "parameters.epsilon");
      if (!(p.epsilon > 0.0)) {
        throw ValidationError("epsilon", "must be positive");
      }
      return Job{kind, std::move(p)};
    }
    case JobKind::Descriptions: {
      return Job{kind, DescriptionsPayload{serialize::parse_description(left, "left"),
                                           serialize::parse_description(right, "right")}};
    }
    case JobKind::Algebras: {
      return Job{kind, AlgebrasPayload{serialize::parse_invariant(left, "left"),
                                       serialize::parse_invariant(right, "right")}};
    }
    case JobKind::Automorphisms: {
      AutomorphismsPayload p{serialize::parse_system(left, "left"),
                             serialize::parse_system(right, "right"),
                             {}};
      const bool has_schedule = parameters.contains("schedule");
      const bool has_height = parameters.contains("tower_height");
      if (has_schedule && has_height) {
        throw ValidationError("parameters", "schedule and tower_height are exclusive");
      }
      if (has_schedule) {
        p.schedule = serialize::parse_schedule(parameters.at("schedule"),
                                               "parameters.schedule");
      } else if (has_height) {
        const std::size_t n = serialize::natural_at(parameters.at("tower_height"),
                                                    "parameters.tower_height");
        Rat eps = 0;
        if (parameters.contains("epsilon")) {
          eps = serialize::rational_at(parameters.at("epsilon"), "parameters.epsilon");
        }
        p.schedule.emplace_back(n, std::move(eps));
      } else {
        throw ValidationError("parameters",
                              "automorphisms jobs require tower_height or schedule");
      }
      return Job{kind, std::move(p)};
    }
    case JobKind::Randomizations: {
      return Job{kind, RandomizationsPayload{serialize::parse_profile(left, "left"),
                                             serialize::parse_profile(right, "right")}};
    }
  }
  throw std::logic_error("unreachable kind");
}

json serialize_job(const Job& job) {
  json doc;
  doc["kind"] = to_string(job.kind);
  json parameters = json::object();
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, OperatorsPayload>) {
          doc["left"] = serialize::json_of(p.left);
          doc["right"] = serialize::json_of(p.right);
          parameters["epsilon"] = p.epsilon;
        } else if constexpr (std::is_same_v<T, DescriptionsPayload>) {
          doc["left"] = serialize::json_of(p.left);
          doc["right"] = serialize::json_of(p.right);
        } else if constexpr (std::is_same_v<T, AlgebrasPayload>) {
          doc["left"] = serialize::json_of(p.left);
          doc["right"] = serialize::json_of(p.right);
        } else if constexpr (std::is_same_v<T, AutomorphismsPayload>) {
          doc["left"] = serialize::json_of(p.left);
          doc["right"] = serialize::json_of(p.right);
          parameters["schedule"] = serialize::json_of_schedule(p.schedule);
        } else {
          doc["left"] = serialize::json_of(p.left);
          doc["right"] = serialize::json_of(p.right);
        }
      },
      job.payload);
  doc["parameters"] = std::move(parameters);
  return doc;
}

// ---- run ----

namespace {

Certificate make_certificate(const Job& job, const std::string& verdict, json witness,
                             json bounds) {
  Certificate cert;
  cert.doc = json{{"format", kFormatVersion}, {"kind", to_string(job.kind)},
                  {"verdict", verdict},       {"job", serialize_job(job)},
                  {"witness", std::move(witness)}, {"bounds", std::move(bounds)}};
  return cert;
}

double operators_residual(const symspec::SelfAdjointOperator& left,
                          const symspec::SelfAdjointOperator& right,
                          const symspec::OrthogonalMap& u) {
  const Matrix conj = u.entries() * left.entries() * transpose(u.entries());
  return symspec::operator_norm(
      symspec::SelfAdjointOperator::from_rows(right.entries() - symmetric_part(conj)));
}

Certificate run_operators(const Job& job, const OperatorsPayload& p) {
  const symspec::OrthogonalMap u =
      symspec::approximate_unitary(p.left, p.right, p.epsilon);
  const double residual = operators_residual(p.left, p.right, u);
  json witness{{"unitary", serialize::json_of(u)}};
  json bounds = json::array();
  bounds.push_back(bound_entry("residual_operator_norm", residual));
  bounds.push_back(bound_entry("epsilon", p.epsilon));
  return make_certificate(job, kVerdictUnitary, std::move(witness), std::move(bounds));
}

Certificate run_descriptions(const Job& job, const DescriptionsPayload& p) {
  const bool equivalent = symspec::spectrally_equivalent(p.left, p.right);
  const bool forward = symspec::description_embeddable(p.left, p.right);
  const bool backward = symspec::description_embeddable(p.right, p.left);
  json witness{{"spectrally_equivalent", equivalent},
               {"embeds_forward", forward},
               {"embeds_backward", backward}};
  return make_certificate(job, descriptions_verdict(equivalent, forward, backward),
                          std::move(witness), json::array());
}

Certificate run_algebras(const Job& job, const AlgebrasPayload& p) {
  const maharam::MaharamInvariant left = maharam::normalize(p.left);
  const maharam::MaharamInvariant right = maharam::normalize(p.right);
  const Verdict verdict = maharam::sb_decide(left, right);

  const bool forward = maharam::tail_dominance_embeddable(left, right);
  const bool backward = maharam::tail_dominance_embeddable(right, left);
  std::optional<flow::TransportPlan> forward_plan, backward_plan;
  if (left.atoms == right.atoms) {
    forward_plan = maharam::flow_embeddable(left, right);
    backward_plan = maharam::flow_embeddable(right, left);
  }
  if (forward != forward_plan.has_value() || backward != backward_plan.has_value()) {
    throw InternalContradiction("dominance and transport feasibility disagree");
  }

  json witness{{"left_normalized", serialize::json_of(left)},
               {"right_normalized", serialize::json_of(right)},
               {"forward_plan", forward_plan ? serialize::json_of(*forward_plan) : json()},
               {"backward_plan", backward_plan ? serialize::json_of(*backward_plan) : json()}};
  json bounds = json::array();
  bounds.push_back(bound_entry("left_total_mass", "1/1"));
  bounds.push_back(bound_entry("right_total_mass", "1/1"));
  if (forward_plan) {
    bounds.push_back(
        bound_entry("forward_plan_mass", to_fraction_string(plan_mass(*forward_plan))));
  }
  if (backward_plan) {
    bounds.push_back(
        bound_entry("backward_plan_mass", to_fraction_string(plan_mass(*backward_plan))));
  }
  return make_certificate(job, to_string(verdict), std::move(witness), std::move(bounds));
}

Certificate run_automorphisms(const Job& job, const AutomorphismsPayload& p) {
  const std::vector<apra::ConjugacyCertificate> steps =
      apra::perturbation_sequence(p.left, p.right, p.schedule);
  json step_docs = json::array();
  json bounds = json::array();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    step_docs.push_back(serialize::json_of(steps[k]));
    bounds.push_back(bound_entry("step_" + std::to_string(k) + "_bound",
                                 to_fraction_string(steps[k].bound)));
    bounds.push_back(bound_entry("step_" + std::to_string(k) + "_measured_distance",
                                 to_fraction_string(steps[k].measured_distance)));
  }
  json witness{{"steps", std::move(step_docs)}};
  return make_certificate(job, kVerdictConjugate, std::move(witness), std::move(bounds));
}

Certificate run_randomizations(const Job& job, const RandomizationsPayload& p) {
  const bool partial_order = randomization::validate_catalog(p.left.catalog);
  const Verdict verdict = randomization::sb_decide_randomization(p.left, p.right);
  const bool forward = randomization::upset_dominance_embeddable(p.left, p.right);
  const bool backward = randomization::upset_dominance_embeddable(p.right, p.left);
  const auto forward_plan = randomization::flow_embeddable(p.left, p.right);
  const auto backward_plan = randomization::flow_embeddable(p.right, p.left);
  if (forward != forward_plan.has_value() || backward != backward_plan.has_value()) {
    throw InternalContradiction("dominance and transport feasibility disagree");
  }
  json witness{{"is_partial_order", partial_order},
               {"forward_dominates", forward},
               {"backward_dominates", backward},
               {"forward_plan", forward_plan ? serialize::json_of(*forward_plan) : json()},
               {"backward_plan", backward_plan ? serialize::json_of(*backward_plan) : json()}};
  json bounds = json::array();
  if (forward_plan) {
    bounds.push_back(
        bound_entry("forward_plan_mass", to_fraction_string(plan_mass(*forward_plan))));
  }
  if (backward_plan) {
    bounds.push_back(
        bound_entry("backward_plan_mass", to_fraction_string(plan_mass(*backward_plan))));
  }
  return make_certificate(job, to_string(verdict), std::move(witness), std::move(bounds));
}

}  // namespace

Certificate run(const Job& job) {
  Certificate cert = std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, OperatorsPayload>) return run_operators(job, p);
        else if constexpr (std::is_same_v<T, DescriptionsPayload>) return run_descriptions(job, p);
        else if constexpr (std::is_same_v<T, AlgebrasPayload>) return run_algebras(job, p);
        else if constexpr (std::is_same_v<T, AutomorphismsPayload>) return run_automorphisms(job, p);
        else return run_randomizations(job, p);
      },
      job.payload);
  if (!verify_certificate(cert, job)) {
    throw InternalContradiction("freshly emitted certificate failed verification");
  }
  return cert;
}

// ---- verify ----

namespace {

bool verify_operators(const json& witness, const std::map<std::string, json>& bounds,
                      const std::string& verdict, const OperatorsPayload& p) {
  if (verdict != kVerdictUnitary) return false;
  if (bounds.size() != 2 || !bounds.count("residual_operator_norm") ||
      !bounds.count("epsilon")) {
    return false;
  }
  const json& claimed_eps = bounds.at("epsilon");
  const json& claimed_residual = bounds.at("residual_operator_norm");
  if (!claimed_eps.is_number() || !claimed_residual.is_number()) return false;
  if (claimed_eps.get<double>() != p.epsilon) return false;
  const double residual_claim = claimed_residual.get<double>();
  if (!(residual_claim < p.epsilon) || residual_claim < 0.0) return false;

  const symspec::OrthogonalMap u = serialize::parse_orthogonal(
      serialize::member(witness, "unitary", "witness"), "witness.unitary");
  if (u.dim() != p.left.dim() || p.left.dim() != p.right.dim()) return false;
  const double slack = 1e-12 * std::max(1.0, symspec::operator_norm(p.right));
  return operators_residual(p.left, p.right, u) <= residual_claim + slack;
}

bool verify_descriptions(const json& witness, const std::map<std::string, json>& bounds,
                         const std::string& verdict, const DescriptionsPayload& p) {
  if (!bounds.empty()) return false;
  const bool equivalent = symspec::spectrally_equivalent(p.left, p.right);
  const bool forward = symspec::description_embeddable(p.left, p.right);
  const bool backward = symspec::description_embeddable(p.right, p.left);
  if (serialize::boolean_at(serialize::member(witness, "spectrally_equivalent", "witness"),
                            "witness.spectrally_equivalent") != equivalent) {
    return false;
  }
  if (serialize::boolean_at(serialize::member(witness, "embeds_forward", "witness"),
                            "witness.embeds_forward") != forward) {
    return false;
  }
  if (serialize::boolean_at(serialize::member(witness, "embeds_backward", "witness"),
                            "witness.embeds_backward") != backward) {
    return false;
  }
  return verdict == descriptions_verdict(equivalent, forward, backward);
}

// Checks one direction's plan slot: presence must match `expected`, and a
// present plan must route source weights onto target weights along
// kappa-monotone arcs.
bool verify_algebra_plan(const json& slot, bool expected,
                         const maharam::MaharamInvariant& source,
                         const maharam::MaharamInvariant& target,
                         const std::map<std::string, json>& bounds,
                         const std::string& mass_claim) {
  if (slot.is_null()) return !expected && !bounds.count(mass_claim);
  if (!expected) return false;
  const flow::TransportPlan plan = serialize::parse_plan(slot, "witness.plan");
  std::vector<Rat> supply, demand;
  for (const auto& b : source.blocks) supply.push_back(b.weight);
  for (const auto& b : target.blocks) demand.push_back(b.weight);
  if (!flow::plan_is_valid(plan, supply, demand, [&](std::size_t i, std::size_t j) {
        return source.blocks[i].kappa <= target.blocks[j].kappa;
      })) {
    return false;
  }
  if (!bounds.count(mass_claim)) return false;
  return serialize::rational_at(bounds.at(mass_claim), mass_claim) == plan_mass(plan);
}

bool verify_algebras(const json& witness, const std::map<std::string, json>& bounds,
                     const std::string& verdict, const AlgebrasPayload& p) {
  const maharam::MaharamInvariant left = maharam::normalize(p.left);
  const maharam::MaharamInvariant right = maharam::normalize(p.right);
  if (serialize::parse_invariant(serialize::member(witness, "left_normalized", "witness"),
                                 "witness.left_normalized") != left) {
    return false;
  }
  if (serialize::parse_invariant(serialize::member(witness, "right_normalized", "witness"),
                                 "witness.right_normalized") != right) {
    return false;
  }

  std::size_t expected_bounds = 2;
  if (!bounds.count("left_total_mass") ||
      serialize::rational_at(bounds.at("left_total_mass"), "left_total_mass") != 1) {
    return false;
  }
  if (!bounds.count("right_total_mass") ||
      serialize::rational_at(bounds.at("right_total_mass"), "right_total_mass") != 1) {
    return false;
  }

  const bool forward = maharam::tail_dominance_embeddable(left, right);
  const bool backward = maharam::tail_dominance_embeddable(right, left);
  expected_bounds += (forward ? 1 : 0) + (backward ? 1 : 0);
  if (bounds.size() != expected_bounds) return false;
  if (!verify_algebra_plan(serialize::member(witness, "forward_plan", "witness"), forward,
                           left, right, bounds, "forward_plan_mass")) {
    return false;
  }
  if (!verify_algebra_plan(serialize::member(witness, "backward_plan", "witness"), backward,
                           right, left, bounds, "backward_plan_mass")) {
    return false;
  }

  std::string expected_verdict;
  if (forward && backward) {
    if (left != right) return false;  // the SB theorem at invariant level
    expected_verdict = to_string(Verdict::Isomorphic);
  } else if (forward) {
    expected_verdict = to_string(Verdict::EmbedsOnlyForward);
  } else if (backward) {
    expected_verdict = to_string(Verdict::EmbedsOnlyBackward);
  } else {
    expected_verdict = to_string(Verdict::Incomparable);
  }
  return verdict == expected_verdict;
}

bool verify_automorphisms(const json& witness, const std::map<std::string, json>& bounds,
                          const std::string& verdict, const AutomorphismsPayload& p) {
  if (verdict != kVerdictConjugate) return false;
  if (p.schedule.empty()) return false;
  for (std::size_t k = 1; k < p.schedule.size(); ++k) {
    const Rat prev = Rat(1, p.schedule[k - 1].first) + p.schedule[k - 1].second;
    const Rat curr = Rat(1, p.schedule[k].first) + p.schedule[k].second;
    if (!(curr < prev)) return false;
  }
  const json& steps = serialize::member(witness, "steps", "witness");
  if (!steps.is_array() || steps.size() != p.schedule.size()) return false;
  if (bounds.size() != 2 * p.schedule.size()) return false;

  for (std::size_t k = 0; k < steps.size(); ++k) {
    const apra::ConjugacyCertificate step =
        serialize::parse_conjugacy(steps[k], "witness.steps[" + std::to_string(k) + "]");
    const auto& [height, eps] = p.schedule[k];
    if (height == 0) return false;
    if (step.bound != Rat(1, height) + eps) return false;
    // conjugate() rejects non-bijective or block-breaking phi.
    const apra::BlockedPermutationSystem moved = apra::conjugate(p.left, step.phi);
    const Rat measured = apra::uniform_distance(moved, p.right);
    if (measured != step.measured_distance) return false;
    if (measured > step.bound) return false;

    const std::string prefix = "step_" + std::to_string(k) + "_";
    if (!bounds.count(prefix + "bound") ||
        serialize::rational_at(bounds.at(prefix + "bound"), prefix + "bound") != step.bound) {
      return false;
    }
    if (!bounds.count(prefix + "measured_distance") ||
        serialize::rational_at(bounds.at(prefix + "measured_distance"),
                               prefix + "measured_distance") != step.measured_distance) {
      return false;
    }
  }
  return true;
}

bool verify_randomization_plan(const json& slot, bool expected,
                               const randomization::DensityProfile& source,
                               const randomization::DensityProfile& target,
                               const std::map<std::string, json>& bounds,
                               const std::string& mass_claim) {
  if (slot.is_null()) return !expected && !bounds.count(mass_claim);
  if (!expected) return false;
  const flow::TransportPlan plan = serialize::parse_plan(slot, "witness.plan");
  if (!flow::plan_is_valid(plan, source.rho, target.rho, [&](std::size_t i, std::size_t j) {
        return static_cast<bool>(source.catalog.embeds[i][j]);
      })) {
    return false;
  }
  if (!bounds.count(mass_claim)) return false;
  return serialize::rational_at(bounds.at(mass_claim), mass_claim) == plan_mass(plan);
}

bool verify_randomizations(const json& witness, const std::map<std::string, json>& bounds,
                           const std::string& verdict, const RandomizationsPayload& p) {
  if (!(p.left.catalog == p.right.catalog)) return false;
  const bool partial_order = randomization::validate_catalog(p.left.catalog);
  const bool forward = randomization::upset_dominance_embeddable(p.left, p.right);
  const bool backward = randomization::upset_dominance_embeddable(p.right, p.left);
  const bool equal = p.left.rho == p.right.rho;

  if (serialize::boolean_at(serialize::member(witness, "is_partial_order", "witness"),
                            "witness.is_partial_order") != partial_order) {
    return false;
  }
  if (serialize::boolean_at(serialize::member(witness, "forward_dominates", "witness"),
                            "witness.forward_dominates") != forward) {
    return false;
  }
  if (serialize::boolean_at(serialize::member(witness, "backward_dominates", "witness"),
                            "witness.backward_dominates") != backward) {
    return false;
  }
  if (bounds.size() != static_cast<std::size_t>(forward ? 1 : 0) + (backward ? 1 : 0)) {
    return false;
  }
  if (!verify_randomization_plan(serialize::member(witness, "forward_plan", "witness"),
                                 forward, p.left, p.right, bounds, "forward_plan_mass")) {
    return false;
  }
  if (!verify_randomization_plan(serialize::member(witness, "backward_plan", "witness"),
                                 backward, p.right, p.left, bounds, "backward_plan_mass")) {
    return false;
  }

  std::string expected_verdict;
  if (forward && backward) {
    if (equal) {
      expected_verdict = to_string(Verdict::Isomorphic);
    } else if (partial_order) {
      return false;  // impossible over a partial order
    } else {
      expected_verdict = to_string(Verdict::SBFailureWitness);
    }
  } else if (forward) {
    expected_verdict = to_string(Verdict::EmbedsOnlyForward);
  } else if (backward) {
    expected_verdict = to_string(Verdict::EmbedsOnlyBackward);
  } else {
    expected_verdict = to_string(Verdict::Incomparable);
  }
  return verdict == expected_verdict;
}

}  // namespace

bool verify_certificate(const Certificate& cert, const Job& job) {
  try {
    const json& doc = cert.doc;
    if (!doc.is_object()) return false;
    if (doc.at("format").get<std::string>() != kFormatVersion) return false;
    if (doc.at("kind").get<std::string>() != to_string(job.kind)) return false;
    if (doc.at("job") != serialize_job(job)) return false;
    const std::string verdict = doc.at("verdict").get<std::string>();
    const json& witness = doc.at("witness");
    const std::map<std::string, json> bounds = bounds_map(doc.at("bounds"));
    return std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, OperatorsPayload>) {
            return verify_operators(witness, bounds, verdict, p);
          } else if constexpr (std::is_same_v<T, DescriptionsPayload>) {
            return verify_descriptions(witness, bounds, verdict, p);
          } else if constexpr (std::is_same_v<T, AlgebrasPayload>) {
            return verify_algebras(witness, bounds, verdict, p);
          } else if constexpr (std::is_same_v<T, AutomorphismsPayload>) {
            return verify_automorphisms(witness, bounds, verdict, p);
          } else {
            return verify_randomizations(witness, bounds, verdict, p);
          }
        },
        job.payload);
  } catch (...) {
    return false;
  }
}

bool verify_certificate(const Certificate& cert) {
  try {
    return verify_certificate(cert, parse_job(cert.doc.at("job")));
  } catch (...) {
    return false;
  }
}

int exit_code_for(const Certificate& cert) {
  const std::string v = cert.verdict();
  const bool positive = v == kVerdictUnitary || v == kVerdictEquivalent ||
                        v == kVerdictConjugate || v == to_string(Verdict::Isomorphic);
  return positive ? 0 : 1;
}

}  // namespace sbkit::cli
