// serialize.hpp — JSON wire formats for every domain type.  Parsers track a
// dotted path ("left.rows[2][0]") and throw ParseError pointing at the
// offending element; writers emit the canonical form, so parse-then-serialize
// is the identity on semantics.  Rationals travel as "p/q" strings, reals as
// JSON numbers.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sbkit/apra.hpp"
#include "sbkit/flow.hpp"
#include "sbkit/maharam.hpp"
#include "sbkit/randomization.hpp"
#include "sbkit/symspec.hpp"

namespace sbkit::serialize {

using nlohmann::json;

// Shared low-level accessors; all throw ParseError with the given path.
const json& member(const json& j, const char* key, const std::string& path);
std::uint64_t natural_at(const json& j, const std::string& path);
double number_at(const json& j, const std::string& path);
bool boolean_at(const json& j, const std::string& path);
std::string string_at(const json& j, const std::string& path);
Rat rational_at(const json& j, const std::string& path);

// Parses a whole document; `source` names it in diagnostics.
json parse_text(const std::string& text, const std::string& source);

// {"dim": n, "rows": [[...], ...]}
symspec::SelfAdjointOperator parse_operator(const json& j, const std::string& path);
json json_of(const symspec::SelfAdjointOperator& op);

// Same shape as an operator; used for unitary witnesses.
symspec::OrthogonalMap parse_orthogonal(const json& j, const std::string& path);
json json_of(const symspec::OrthogonalMap& u);

// {"isolated": [[value, mult], ...], "essential": [[value, eigenMult | "inf"], ...]}
symspec::SpectralDescription parse_description(const json& j, const std::string& path);
json json_of(const symspec::SpectralDescription& d);

// {"atoms": ["1/2", ...], "blocks": [["1/4", 0], ...]}
maharam::MaharamInvariant parse_invariant(const json& j, const std::string& path);
json json_of(const maharam::MaharamInvariant& inv);

// {"N": 12, "blocks": [6, 6], "pi": [...]}
apra::BlockedPermutationSystem parse_system(const json& j, const std::string& path);
json json_of(const apra::BlockedPermutationSystem& sys);

// {"phi": [...], "bound": "p/q", "measured_distance": "p/q"}
apra::ConjugacyCertificate parse_conjugacy(const json& j, const std::string& path);
json json_of(const apra::ConjugacyCertificate& cert);

// {"ids": ["M0", ...], "embeds": [[true, ...], ...]}
randomization::ModelCatalog parse_catalog(const json& j, const std::string& path);
json json_of(const randomization::ModelCatalog& catalog);

// {"catalog": {...}, "rho": {"M0": "1/2", ...}}; ids absent from rho carry
// mass zero, unknown ids are rejected.
randomization::DensityProfile parse_profile(const json& j, const std::string& path);
json json_of(const randomization::DensityProfile& profile);

// {"entries": [{"from": i, "to": j, "amount": "p/q"}, ...]}
flow::TransportPlan parse_plan(const json& j, const std::string& path);
json json_of(const flow::TransportPlan& plan);

// [[height, "eps"], ...]
std::vector<std::pair<std::size_t, Rat>> parse_schedule(const json& j,
                                                        const std::string& path);
json json_of_schedule(const std::vector<std::pair<std::size_t, Rat>>& schedule);

}  // namespace sbkit::serialize
