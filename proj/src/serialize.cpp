// serialize.cpp

#include "sbkit/serialize.hpp"

#include <algorithm>

namespace sbkit::serialize {

namespace {

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string key(const std::string& path, const char* k) {
  return path.empty() ? std::string(k) : path + "." + k;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

}  // namespace

const json& member(const json& j, const char* k, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  const auto it = j.find(k);
  if (it == j.end()) throw ParseError(path, std::string("missing member '") + k + "'");
  return *it;
}

std::uint64_t natural_at(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(path, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path, "expected a number");
  return j.get<double>();
}

bool boolean_at(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError(path, "expected a boolean");
  return j.get<bool>();
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

Rat rational_at(const json& j, const std::string& path) {
  const std::string text = string_at(j, path);
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source, e.what());
  }
}

// ---- operators ----

namespace {

Matrix parse_square_matrix(const json& j, const std::string& path) {
  const std::size_t dim = natural_at(member(j, "dim", path), key(path, "dim"));
  const json& rows = array_at(member(j, "rows", path), key(path, "rows"));
  if (rows.size() != dim) {
    throw ParseError(key(path, "rows"), "expected " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_path = idx(key(path, "rows"), i);
    const json& row = array_at(rows[i], row_path);
    if (row.size() != dim) {
      throw ParseError(row_path, "expected " + std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      m(i, c) = number_at(row[c], idx(row_path, c));
    }
  }
  return m;
}

json json_of_matrix(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"rows", std::move(rows)}};
}

}  // namespace

symspec::SelfAdjointOperator parse_operator(const json& j, const std::string& path) {
  return symspec::SelfAdjointOperator::from_rows(parse_square_matrix(j, path));
}

json json_of(const symspec::SelfAdjointOperator& op) {
  return json_of_matrix(op.entries());
}

symspec::OrthogonalMap parse_orthogonal(const json& j, const std::string& path) {
  return symspec::OrthogonalMap::from_rows(parse_square_matrix(j, path));
}

json json_of(const symspec::OrthogonalMap& u) {
  return json_of_matrix(u.entries());
}

// ---- descriptions ----

symspec::SpectralDescription parse_description(const json& j, const std::string& path) {
  std::vector<symspec::IsolatedPoint> isolated;
  const std::string iso_path = key(path, "isolated");
  const json& iso = array_at(member(j, "isolated", path), iso_path);
  for (std::size_t i = 0; i < iso.size(); ++i) {
    const std::string p = idx(iso_path, i);
    const json& pair = array_at(iso[i], p);
    if (pair.size() != 2) throw ParseError(p, "expected [value, multiplicity]");
    isolated.push_back({number_at(pair[0], idx(p, 0)), natural_at(pair[1], idx(p, 1))});
  }
  std::vector<symspec::EssentialPoint> essential;
  const std::string ess_path = key(path, "essential");
  const json& ess = array_at(member(j, "essential", path), ess_path);
  for (std::size_t i = 0; i < ess.size(); ++i) {
    const std::string p = idx(ess_path, i);
    const json& pair = array_at(ess[i], p);
    if (pair.size() != 2) throw ParseError(p, "expected [value, eigenMult]");
    symspec::EssentialPoint point;
    point.value = number_at(pair[0], idx(p, 0));
    if (pair[1].is_string()) {
      if (pair[1].get<std::string>() != "inf") {
        throw ParseError(idx(p, 1), "expected a nonnegative integer or \"inf\"");
      }
      point.eigen_multiplicity = symspec::EigenMultiplicity::inf();
    } else {
      point.eigen_multiplicity =
          symspec::EigenMultiplicity::finite(natural_at(pair[1], idx(p, 1)));
    }
    essential.push_back(point);
  }
  return symspec::SpectralDescription::make(std::move(isolated), std::move(essential));
}

json json_of(const symspec::SpectralDescription& d) {
  json iso = json::array();
  for (const auto& p : d.isolated()) iso.push_back(json::array({p.value, p.multiplicity}));
  json ess = json::array();
  for (const auto& p : d.essential()) {
    if (p.eigen_multiplicity.infinite) {
      ess.push_back(json::array({p.value, "inf"}));
    } else {
      ess.push_back(json::array({p.value, p.eigen_multiplicity.count}));
    }
  }
  return json{{"isolated", std::move(iso)}, {"essential", std::move(ess)}};
}

// ---- measure-algebra invariants ----

maharam::MaharamInvariant parse_invariant(const json& j, const std::string& path) {
  maharam::MaharamInvariant inv;
  const std::string atoms_path = key(path, "atoms");
  const json& atoms = array_at(member(j, "atoms", path), atoms_path);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    inv.atoms.push_back(rational_at(atoms[i], idx(atoms_path, i)));
  }
  const std::string blocks_path = key(path, "blocks");
  const json& blocks = array_at(member(j, "blocks", path), blocks_path);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string p = idx(blocks_path, i);
    const json& pair = array_at(blocks[i], p);
    if (pair.size() != 2) throw ParseError(p, "expected [weight, kappaIndex]");
    maharam::Block b;
    b.weight = rational_at(pair[0], idx(p, 0));
    b.kappa.index = static_cast<unsigned>(natural_at(pair[1], idx(p, 1)));
    inv.blocks.push_back(std::move(b));
  }
  return inv;
}

json json_of(const maharam::MaharamInvariant& inv) {
  json atoms = json::array();
  for (const Rat& a : inv.atoms) atoms.push_back(to_fraction_string(a));
  json blocks = json::array();
  for (const maharam::Block& b : inv.blocks) {
    blocks.push_back(json::array({to_fraction_string(b.weight), b.kappa.index}));
  }
  return json{{"atoms", std::move(atoms)}, {"blocks", std::move(blocks)}};
}

// ---- permutation systems ----

apra::BlockedPermutationSystem parse_system(const json& j, const std::string& path) {
  const std::size_t n = natural_at(member(j, "N", path), key(path, "N"));
  const std::string blocks_path = key(path, "blocks");
  const json& blocks = array_at(member(j, "blocks", path), blocks_path);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    sizes.push_back(natural_at(blocks[i], idx(blocks_path, i)));
    total += sizes.back();
  }
  if (total != n) {
    throw ParseError(key(path, "N"), "does not equal the sum of block sizes");
  }
  const std::string pi_path = key(path, "pi");
  const json& pi = array_at(member(j, "pi", path), pi_path);
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    perm.push_back(natural_at(pi[i], idx(pi_path, i)));
  }
  return apra::BlockedPermutationSystem::make(std::move(sizes), std::move(perm));
}

json json_of(const apra::BlockedPermutationSystem& sys) {
  return json{{"N", sys.size()}, {"blocks", sys.block_sizes()}, {"pi", sys.pi()}};
}

apra::ConjugacyCertificate parse_conjugacy(const json& j, const std::string& path) {
  apra::ConjugacyCertificate cert;
  const std::string phi_path = key(path, "phi");
  const json& phi = array_at(member(j, "phi", path), phi_path);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    cert.phi.push_back(natural_at(phi[i], idx(phi_path, i)));
  }
  cert.bound = rational_at(member(j, "bound", path), key(path, "bound"));
  cert.measured_distance =
      rational_at(member(j, "measured_distance", path), key(path, "measured_distance"));
  return cert;
}

json json_of(const apra::ConjugacyCertificate& cert) {
  return json{{"phi", cert.phi},
              {"bound", to_fraction_string(cert.bound)},
              {"measured_distance", to_fraction_string(cert.measured_distance)}};
}

// ---- catalogs and profiles ----

randomization::ModelCatalog parse_catalog(const json& j, const std::string& path) {
  randomization::ModelCatalog catalog;
  const std::string ids_path = key(path, "ids");
  const json& ids = array_at(member(j, "ids", path), ids_path);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    catalog.ids.push_back(string_at(ids[i], idx(ids_path, i)));
  }
  const std::string embeds_path = key(path, "embeds");
  const json& embeds = array_at(member(j, "embeds", path), embeds_path);
  for (std::size_t i = 0; i < embeds.size(); ++i) {
    const std::string row_path = idx(embeds_path, i);
    const json& row = array_at(embeds[i], row_path);
    std::vector<bool> flags;
    for (std::size_t c = 0; c < row.size(); ++c) {
      flags.push_back(boolean_at(row[c], idx(row_path, c)));
    }
    catalog.embeds.push_back(std::move(flags));
  }
  return catalog;
}

json json_of(const randomization::ModelCatalog& catalog) {
  json embeds = json::array();
  for (const auto& row : catalog.embeds) {
    json r = json::array();
    for (bool b : row) r.push_back(b);
    embeds.push_back(std::move(r));
  }
  return json{{"ids", catalog.ids}, {"embeds", std::move(embeds)}};
}

randomization::DensityProfile parse_profile(const json& j, const std::string& path) {
  randomization::ModelCatalog catalog =
      parse_catalog(member(j, "catalog", path), key(path, "catalog"));
  const std::string rho_path = key(path, "rho");
  const json& rho = member(j, "rho", path);
  if (!rho.is_object()) throw ParseError(rho_path, "expected an object");
  std::vector<Rat> masses(catalog.ids.size(), Rat(0));
  for (const auto& [id, value] : rho.items()) {
    const auto it = std::find(catalog.ids.begin(), catalog.ids.end(), id);
    if (it == catalog.ids.end()) {
      throw ParseError(key(rho_path, id.c_str()), "unknown model id");
    }
    masses[static_cast<std::size_t>(it - catalog.ids.begin())] =
        rational_at(value, key(rho_path, id.c_str()));
  }
  return randomization::make_profile(std::move(catalog), std::move(masses));
}

json json_of(const randomization::DensityProfile& profile) {
  json rho = json::object();
  for (std::size_t i = 0; i < profile.rho.size(); ++i) {
    rho[profile.catalog.ids[i]] = to_fraction_string(profile.rho[i]);
  }
  return json{{"catalog", json_of(profile.catalog)}, {"rho", std::move(rho)}};
}

// ---- transport plans ----

flow::TransportPlan parse_plan(const json& j, const std::string& path) {
  flow::TransportPlan plan;
  const std::string entries_path = key(path, "entries");
  const json& entries = array_at(member(j, "entries", path), entries_path);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string p = idx(entries_path, i);
    flow::PlanEntry e;
    e.source = natural_at(member(entries[i], "from", p), key(p, "from"));
    e.target = natural_at(member(entries[i], "to", p), key(p, "to"));
    e.amount = rational_at(member(entries[i], "amount", p), key(p, "amount"));
    plan.entries.push_back(std::move(e));
  }
  return plan;
}

json json_of(const flow::TransportPlan& plan) {
  json entries = json::array();
  for (const flow::PlanEntry& e : plan.entries) {
    entries.push_back(json{{"from", e.source},
                           {"to", e.target},
                           {"amount", to_fraction_string(e.amount)}});
  }
  return json{{"entries", std::move(entries)}};
}

// ---- schedules ----

std::vector<std::pair<std::size_t, Rat>> parse_schedule(const json& j,
                                                        const std::string& path) {
  const json& steps = array_at(j, path);
  std::vector<std::pair<std::size_t, Rat>> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = idx(path, i);
    const json& pair = array_at(steps[i], p);
    if (pair.size() != 2) throw ParseError(p, "expected [height, eps]");
    out.emplace_back(natural_at(pair[0], idx(p, 0)), rational_at(pair[1], idx(p, 1)));
  }
  return out;
}

json json_of_schedule(const std::vector<std::pair<std::size_t, Rat>>& schedule) {
  json steps = json::array();
  for (const auto& [n, eps] : schedule) {
    steps.push_back(json::array({n, to_fraction_string(eps)}));
  }
  return steps;
}

}  // namespace sbkit::serialize
