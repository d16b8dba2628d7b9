#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthobound/bounds.hpp"
#include "orthobound/campaign.hpp"
#include "orthobound/experiments.hpp"
#include "orthobound/family.hpp"
#include "orthobound/hypothesis.hpp"
#include "orthobound/space.hpp"

namespace orthobound {

using Json = nlohmann::ordered_json;

/// Scalars are [re, im]; plain numbers are accepted on input. Parse errors
/// throw InvalidArgument (or DimensionMismatch) prefixed with the JSON
/// pointer of the offending field.
Json to_json(Scalar z);
Json to_json(const Vector& v);
Json to_json(const QuadratureGrid& grid);
Json to_json(const OrthonormalFamily& fam);
Json to_json(const BoundChain& chain);
Json to_json(const HypothesisReport& report);
Json to_json(const FuzzSummary& summary);
Json to_json(const EquivalenceSummary& summary);
Json to_json(const PairInstance& inst);
Json to_json(const ComparisonWitnesses& w);
Json to_json(const std::vector<EqualityCase>& cases);

Scalar scalar_from_json(const Json& j, const std::string& path);
std::vector<Scalar> scalars_from_json(const Json& j, const std::string& path);
Vector vector_from_json(const Json& j, const std::string& path, Field field);
QuadratureGrid grid_from_json(const Json& j, const std::string& path);
/// {"members": [...], "tolerance": t} or a bare array of members.
OrthonormalFamily family_from_json(const Json& j, const std::string& path, Field field);

/// {"family", "x", "phi", "Phi"} plus optional "y" with "gamma"/"Gamma" and
/// "delta"/"Delta". "field" ("real" | "complex") defaults to real when every
/// scalar in the file has a zero imaginary part.
struct Instance {
  Field field = Field::Complex;
  OrthonormalFamily family;
  Vector x;
  ScalarCorridor cx;
  std::optional<Vector> y;
  std::optional<ScalarCorridor> cy;
  std::optional<Scalar> delta;
  std::optional<Scalar> Delta;
};

Instance instance_from_json(const Json& j);
Json to_json(const Instance& inst);

}  // namespace orthobound
