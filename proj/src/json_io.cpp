#include "orthobound/json_io.hpp"

#include <cmath>
#include <string>

#include "orthobound/error.hpp"

namespace orthobound {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what, ErrorKind kind = ErrorKind::InvalidArgument) {
  throw Error(kind, (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string at(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& require(const Json& j, const std::string& path, std::string_view key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(std::string(key));
  if (it == j.end()) fail(at(path, key), "missing field");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "not finite", ErrorKind::NonFinite);
  return v;
}

std::vector<double> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], at(path, i)));
  return out;
}

bool all_real(std::span<const Scalar> zs) {
  for (auto z : zs) {
    if (z.imag() != 0.0) return false;
  }
  return true;
}

Json numbers_json(std::span<const double> xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(x);
  return a;
}

Json scalars_json(std::span<const Scalar> zs) {
  Json a = Json::array();
  for (auto z : zs) a.push_back(to_json(z));
  return a;
}

// Prefixes constructor failures with the field path.
template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    const std::string msg = e.what();
    throw Error(e.kind(), path + ": " + msg.substr(to_string(e.kind()).size() + 2));
  }
}

Json tally_json(const BoundTally& t) {
  Json j;
  j["evaluated"] = t.evaluated;
  j["violations"] = t.violations;
  j["min_slack"] = t.min_slack;
  j["worst_trial"] = t.worst_trial;
  return j;
}

Json witness_json(const ComparisonWitness& w) {
  Json j;
  j["trial"] = w.trial;
  j["eq1.3_refined"] = w.sqrt_refined;
  j["eq1.4_refined"] = w.midpoint_refined;
  j["outer"] = w.outer;
  j["margin"] = w.margin;
  j["instance"] = to_json(w.instance);
  return j;
}

}  // namespace

Json to_json(Scalar z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Vector& v) { return scalars_json(v.coords()); }

Json to_json(const QuadratureGrid& grid) {
  Json j;
  j["nodes"] = numbers_json(grid.nodes());
  j["weights"] = numbers_json(grid.weights());
  j["rho"] = numbers_json(grid.rho());
  return j;
}

Json to_json(const OrthonormalFamily& fam) {
  Json j;
  Json members = Json::array();
  for (const auto& e : fam.members()) members.push_back(to_json(e));
  j["members"] = std::move(members);
  j["gram_residual"] = fam.gram_residual();
  j["tolerance"] = fam.tolerance();
  return j;
}

Json to_json(const BoundChain& chain) {
  Json j;
  j["labels"] = chain.labels;
  j["values"] = chain.values;
  j["all_hold"] = chain.all_hold;
  j["slacks"] = chain.slacks;
  j["verified"] = chain.verified;
  return j;
}

Json to_json(const HypothesisReport& r) {
  Json j;
  j["cond_i_value"] = r.cond_i_value;
  j["cond_ii_residual"] = r.cond_ii_residual;
  j["radius"] = r.radius;
  j["holds"] = r.holds;
  j["identity_gap"] = r.identity_gap;
  return j;
}

Json to_json(const FuzzSummary& s) {
  Json j;
  j["seed"] = s.config.seed;
  j["count"] = s.config.count;
  j["dim"] = s.config.dim;
  j["family"] = s.config.family_size;
  j["mode"] = s.config.mode == Field::Real ? "real" : "complex";
  j["corridor"] = s.config.sign == CorridorSign::NonNegative ? "nonnegative" : "signed";
  j["trials"] = s.trials;
  j["rejected"] = s.rejected;
  j["violations"] = s.total_violations();
  Json bounds;
  for (std::size_t k = 0; k < kBoundCount; ++k) {
    bounds[std::string(bound_name(static_cast<BoundId>(k)))] = tally_json(s.bounds[k]);
  }
  j["bounds"] = std::move(bounds);
  return j;
}

Json to_json(const EquivalenceSummary& s) {
  Json j;
  j["trials"] = s.trials;
  j["real_trials"] = s.real_trials;
  j["admissible"] = s.admissible;
  j["inside_band"] = s.inside_band;
  j["disagreements"] = s.disagreements;
  j["identity_failures"] = s.identity_failures;
  j["max_identity_gap"] = s.max_identity_gap;
  return j;
}

Json to_json(const PairInstance& inst) {
  Json j;
  j["family"] = to_json(inst.family);
  j["x"] = to_json(inst.x);
  j["phi"] = scalars_json(inst.cx.lo());
  j["Phi"] = scalars_json(inst.cx.hi());
  j["y"] = to_json(inst.y);
  j["gamma"] = scalars_json(inst.cy.lo());
  j["Gamma"] = scalars_json(inst.cy.hi());
  return j;
}

Json to_json(const ComparisonWitnesses& w) {
  Json j;
  j["eq1.3_tighter"] = witness_json(w.sqrt_tighter);
  j["eq1.4_tighter"] = witness_json(w.midpoint_tighter);
  return j;
}

Json to_json(const std::vector<EqualityCase>& cases) {
  Json a = Json::array();
  for (const auto& c : cases) {
    Json j;
    j["name"] = c.name;
    j["slack"] = c.slack;
    j["tolerance"] = c.tolerance;
    j["passed"] = c.passed;
    a.push_back(std::move(j));
  }
  return a;
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {number(j, path), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], at(path, 0)), number(j[1], at(path, 1))};
  fail(path, "expected a number or [re, im]");
}

std::vector<Scalar> scalars_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of scalars");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar_from_json(j[i], at(path, i)));
  return out;
}

Vector vector_from_json(const Json& j, const std::string& path, Field field) {
  auto zs = scalars_from_json(j, path);
  if (zs.empty()) fail(path, "empty vector", ErrorKind::DimensionMismatch);
  return with_path(path, [&] { return Vector(std::move(zs), field); });
}

QuadratureGrid grid_from_json(const Json& j, const std::string& path) {
  auto nodes = numbers(require(j, path, "nodes"), at(path, "nodes"));
  auto weights = numbers(require(j, path, "weights"), at(path, "weights"));
  auto rho = numbers(require(j, path, "rho"), at(path, "rho"));
  return with_path(path, [&] { return QuadratureGrid(std::move(nodes), std::move(weights), std::move(rho)); });
}

OrthonormalFamily family_from_json(const Json& j, const std::string& path, Field field) {
  const bool bare = j.is_array();
  const std::string mpath = bare ? path : at(path, "members");
  const Json& members = bare ? j : require(j, path, "members");
  if (!members.is_array() || members.empty()) fail(mpath, "expected a nonempty array of vectors", ErrorKind::EmptyFamily);
  double tol = tolerance::kFamilyExact;
  if (!bare && j.contains("tolerance")) tol = number(j["tolerance"], at(path, "tolerance"));
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    vs.push_back(vector_from_json(members[i], at(mpath, i), field));
    if (vs.back().dim() != vs.front().dim()) {
      fail(at(mpath, i), "dimension " + std::to_string(vs.back().dim()) + ", expected " +
                             std::to_string(vs.front().dim()), ErrorKind::DimensionMismatch);
    }
  }
  return with_path(path, [&] { return validate_family(std::move(vs), tol); });
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  // First pass in complex mode decides the field when it is not given.
  Field field = Field::Complex;
  std::vector<std::pair<std::string, std::vector<Scalar>>> raw;
  const auto grab = [&](std::string_view key) {
    raw.emplace_back("/" + std::string(key), scalars_from_json(require(j, "", key), "/" + std::string(key)));
  };
  const Json& fam_json = require(j, "", "family");
  const Json& members = fam_json.is_array() ? fam_json : require(fam_json, "/family", "members");
  if (!members.is_array()) fail("/family/members", "expected an array of vectors");
  bool real = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    real = real && all_real(scalars_from_json(members[i], "/family/members/" + std::to_string(i)));
  }
  for (std::string_view key : {"x", "phi", "Phi"}) grab(key);
  const bool has_y = j.contains("y");
  if (has_y) grab("y");
  for (std::string_view key : {"gamma", "Gamma", "delta", "Delta"}) {
    if (j.contains(std::string(key))) {
      if (key == "delta" || key == "Delta") {
        raw.emplace_back("/" + std::string(key),
                         std::vector<Scalar>{scalar_from_json(j[std::string(key)], "/" + std::string(key))});
      } else {
        grab(key);
      }
    }
  }
  for (const auto& [p, zs] : raw) real = real && all_real(zs);

  if (j.contains("field")) {
    const Json& f = j["field"];
    if (f == "real") {
      field = Field::Real;
    } else if (f == "complex") {
      field = Field::Complex;
    } else {
      fail("/field", "expected \"real\" or \"complex\"");
    }
  } else {
    field = real ? Field::Real : Field::Complex;
  }

  OrthonormalFamily family = family_from_json(fam_json, "/family", field);
  Vector x = vector_from_json(j["x"], "/x", field);
  if (x.dim() != family.dim()) {
    fail("/x", "dimension " + std::to_string(x.dim()) + ", family dimension " + std::to_string(family.dim()),
         ErrorKind::DimensionMismatch);
  }
  const auto corridor = [&](std::string_view lo, std::string_view hi) {
    auto l = scalars_from_json(j[std::string(lo)], "/" + std::string(lo));
    auto h = scalars_from_json(j[std::string(hi)], "/" + std::string(hi));
    for (auto [name, zs] : {std::pair{lo, &l}, std::pair{hi, &h}}) {
      if (zs->size() != family.size()) {
        fail("/" + std::string(name), std::to_string(zs->size()) + " entries for " + std::to_string(family.size()) +
                                          " family members", ErrorKind::DimensionMismatch);
      }
      if (field == Field::Real && !all_real(*zs)) {
        fail("/" + std::string(name), "nonzero imaginary part in real mode", ErrorKind::RealModeViolation);
      }
    }
    return with_path("/" + std::string(lo), [&] { return ScalarCorridor(std::move(l), std::move(h)); });
  };
  ScalarCorridor cx = corridor("phi", "Phi");

  std::optional<Vector> y;
  std::optional<ScalarCorridor> cy;
  if (has_y) {
    y = vector_from_json(j["y"], "/y", field);
    if (y->dim() != family.dim()) fail("/y", "dimension mismatch with the family", ErrorKind::DimensionMismatch);
    if (j.contains("gamma") != j.contains("Gamma")) fail(j.contains("gamma") ? "/Gamma" : "/gamma", "missing field");
    if (j.contains("gamma")) cy = corridor("gamma", "Gamma");
  } else if (j.contains("gamma") || j.contains("Gamma")) {
    fail("/y", "missing field (gamma/Gamma given)");
  }
  std::optional<Scalar> delta, Delta;
  if (j.contains("delta") != j.contains("Delta")) fail(j.contains("delta") ? "/Delta" : "/delta", "missing field");
  if (j.contains("delta")) {
    delta = scalar_from_json(j["delta"], "/delta");
    Delta = scalar_from_json(j["Delta"], "/Delta");
    if (field == Field::Real && (delta->imag() != 0.0 || Delta->imag() != 0.0)) {
      fail("/delta", "nonzero imaginary part in real mode", ErrorKind::RealModeViolation);
    }
  }
  return Instance{field, std::move(family), std::move(x), std::move(cx), std::move(y), std::move(cy), delta, Delta};
}

Json to_json(const Instance& inst) {
  Json j;
  j["field"] = inst.field == Field::Real ? "real" : "complex";
  j["family"] = to_json(inst.family);
  j["x"] = to_json(inst.x);
  j["phi"] = scalars_json(inst.cx.lo());
  j["Phi"] = scalars_json(inst.cx.hi());
  if (inst.y) j["y"] = to_json(*inst.y);
  if (inst.cy) {
    j["gamma"] = scalars_json(inst.cy->lo());
    j["Gamma"] = scalars_json(inst.cy->hi());
  }
  if (inst.delta) j["delta"] = to_json(*inst.delta);
  if (inst.Delta) j["Delta"] = to_json(*inst.Delta);
  return j;
}

}  // namespace orthobound
