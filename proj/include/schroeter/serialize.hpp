#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "schroeter/engine.hpp"
#include "schroeter/weierstrass.hpp"

namespace schroeter {

using Json = nlohmann::json;

// Rationals travel as strings ("p/q", or "p"); points and lines as arrays of
// three strings. Parsing also accepts two-element affine points and JSON
// integers in place of strings.
Json to_json(const Rat& r);
Json to_json(const ProjPoint& p);
Json to_json(const ProjLine& l);
Json to_json(const Cubic& c);

Rat rat_from_json(const Json& j);
ProjPoint point_from_json(const Json& j);
Cubic cubic_from_json(const Json& j);

// "x,y;x,y;..." affine point list as used on the command line.
std::vector<ProjPoint> parse_point_list(const std::string& text);

struct SeedFile {
  SeedConfig seed;
  std::optional<WeierstrassCurve> weierstrass;
};

// { "pairs": [[P, P̄] ×3], optional "curve": [10 strings],
//   optional "weierstrass": {"a": "..", "b": ".."} }. A Weierstrass entry
// implies its curve.
SeedFile seed_from_json(const Json& j);
Json seed_to_json(const SeedConfig& seed, const std::optional<WeierstrassCurve>& w = std::nullopt);

Json weierstrass_to_json(const WeierstrassCurve& w);
WeierstrassCurve weierstrass_from_json(const Json& j);

Json state_to_json(const ConstructionState& state,
                   const std::optional<WeierstrassCurve>& w = std::nullopt);
// Inverse of state_to_json (lines and counts are recomputed, not trusted).
ConstructionState state_from_json(const Json& j);
std::optional<WeierstrassCurve> weierstrass_of_state_json(const Json& j);

// One point per row: pair,member,x,y,z.
std::string state_to_csv(const ConstructionState& state);

}  // namespace schroeter
