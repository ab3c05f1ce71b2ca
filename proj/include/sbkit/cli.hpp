// cli.hpp — job parsing, dispatch, and machine-checkable certificates.  A job
// document is {"kind": ..., "left": ..., "right": ..., "parameters": {...}};
// run() produces a self-describing certificate (format "v1") embedding the
// canonical job, the witness, and a list of numeric claims, every one of
// which is re-verified by verify_certificate's independent checkers.

#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sbkit/serialize.hpp"

namespace sbkit::cli {

using serialize::json;

enum class JobKind { Operators, Descriptions, Algebras, Automorphisms, Randomizations };

std::string to_string(JobKind kind);
JobKind kind_from_string(const std::string& name);  // throws ParseError("kind", ...)

struct OperatorsPayload {
  symspec::SelfAdjointOperator left;
  symspec::SelfAdjointOperator right;
  double epsilon = 0.0;
};

struct DescriptionsPayload {
  symspec::SpectralDescription left;
  symspec::SpectralDescription right;
};

struct AlgebrasPayload {
  maharam::MaharamInvariant left;   // normalized at dispatch, not at parse
  maharam::MaharamInvariant right;
};

struct AutomorphismsPayload {
  apra::BlockedPermutationSystem left;
  apra::BlockedPermutationSystem right;
  // One entry per conjugacy step; a single (height, eps) job is a one-step
  // schedule.
  std::vector<std::pair<std::size_t, Rat>> schedule;
};

struct RandomizationsPayload {
  randomization::DensityProfile left;
  randomization::DensityProfile right;
};

struct Job {
  JobKind kind = JobKind::Operators;
  std::variant<OperatorsPayload, DescriptionsPayload, AlgebrasPayload,
               AutomorphismsPayload, RandomizationsPayload>
      payload;
};

// Validates the document and the per-kind parameters.  Throws ParseError for
// malformed structure and ValidationError for violated invariants.
Job parse_job(const json& doc);

// Canonical job document; parse_job(serialize_job(j)) reproduces j.
json serialize_job(const Job& job);

struct Certificate {
  json doc;

  std::string verdict() const { return doc.at("verdict").get<std::string>(); }
};

// Dispatches the job and emits a certificate that already passed
// verify_certificate; a certificate that fails its own verification is never
// returned (InternalContradiction instead).
Certificate run(const Job& job);

// True iff the certificate is well formed, embeds exactly this job, and every
// claim (witness validity, bounds, verdict) holds when recomputed from
// scratch.  Never throws.
bool verify_certificate(const Certificate& cert, const Job& job);

// Same, against the certificate's embedded job.
bool verify_certificate(const Certificate& cert);

// 0 for equivalence/isomorphism verdicts, 1 for all negative verdicts.
// (Errors never produce a certificate and exit with 2.)
int exit_code_for(const Certificate& cert);

}  // namespace sbkit::cli
