#include "schroeter/serialize.hpp"

#include <sstream>

#include "schroeter/error.hpp"

namespace schroeter {

namespace {

[[noreturn]] void bad(const std::string& what) { throw GeometryError(ErrorKind::ParseError, what); }

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const ProjPoint& p) { return Json::array({p[0].get_str(), p[1].get_str(), p[2].get_str()}); }

Json to_json(const ProjLine& l) { return Json::array({l[0].get_str(), l[1].get_str(), l[2].get_str()}); }

Json to_json(const Cubic& c) {
  Json out = Json::array();
  for (const auto& k : c.coeffs()) out.push_back(k.get_str());
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  bad("expected a rational string, got " + j.dump());
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 3)) bad("expected a point array, got " + j.dump());
  if (j.size() == 2) return affine_point(rat_from_json(j[0]), rat_from_json(j[1]));
  try {
    return ProjPoint::from_rationals(rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]));
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::TooDegenerate) bad("zero point " + j.dump());
    throw;
  }
}

Cubic cubic_from_json(const Json& j) {
  if (!j.is_array() || j.size() != Cubic::kTerms) bad("expected 10 cubic coefficients, got " + j.dump());
  std::array<Rat, Cubic::kTerms> k;
  for (std::size_t i = 0; i < Cubic::kTerms; ++i) k[i] = rat_from_json(j[i]);
  try {
    return Cubic::from_rationals(k);
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::TooDegenerate) bad("zero cubic");
    throw;
  }
}

std::vector<ProjPoint> parse_point_list(const std::string& text) {
  std::vector<ProjPoint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto comma = item.find(',');
    if (comma == std::string::npos || item.find(',', comma + 1) != std::string::npos) {
      bad("expected 'x,y' but got '" + item + "'");
    }
    out.push_back(affine_point(parse_rat(item.substr(0, comma)), parse_rat(item.substr(comma + 1))));
  }
  return out;
}

Json weierstrass_to_json(const WeierstrassCurve& w) { return Json{{"a", to_string(w.a())}, {"b", to_string(w.b())}}; }

WeierstrassCurve weierstrass_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) bad("curve needs \"a\" and \"b\"");
  return WeierstrassCurve(rat_from_json(j.at("a")), rat_from_json(j.at("b")));
}

SeedFile seed_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pairs")) bad("seed needs a \"pairs\" array");
  const Json& ps = j.at("pairs");
  if (!ps.is_array() || ps.size() != 3) bad("seed needs exactly three pairs");
  std::vector<PointPair> pairs;
  for (const auto& pj : ps) {
    if (!pj.is_array() || pj.size() != 2) bad("each pair needs two points: " + pj.dump());
    pairs.emplace_back(point_from_json(pj[0]), point_from_json(pj[1]));
  }
  std::optional<WeierstrassCurve> w;
  std::optional<Cubic> curve;
  if (j.contains("weierstrass")) {
    w = weierstrass_from_json(j.at("weierstrass"));
    curve = w->cubic();
  }
  if (j.contains("curve")) {
    Cubic c = cubic_from_json(j.at("curve"));
    if (curve && *curve != c) bad("\"curve\" disagrees with \"weierstrass\"");
    curve = c;
  }
  return SeedFile{validate_seed(pairs[0], pairs[1], pairs[2], curve), w};
}

Json seed_to_json(const SeedConfig& seed, const std::optional<WeierstrassCurve>& w) {
  Json pairs = Json::array();
  for (const auto& p : seed.pairs) pairs.push_back(Json::array({to_json(p.first()), to_json(p.second())}));
  Json out{{"pairs", pairs}};
  if (seed.curve) out["curve"] = to_json(*seed.curve);
  if (w) out["weierstrass"] = weierstrass_to_json(*w);
  return out;
}

Json state_to_json(const ConstructionState& state, const std::optional<WeierstrassCurve>& w) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < state.pairs.size(); ++i) {
    const auto& p = state.pairs[i];
    pairs.push_back(Json{{"id", i},
                         {"generation", state.generation[i]},
                         {"seed", static_cast<bool>(state.is_seed[i])},
                         {"points", Json::array({to_json(p.first()), to_json(p.second())})}});
  }
  Json prov = Json::array();
  for (const auto& d : state.provenance) {
    Json e{{"parents", Json::array({d.parent_a, d.parent_b})},
           {"child", d.child ? Json(*d.child) : Json(nullptr)},
           {"skipped", d.skipped}};
    if (d.skipped) {
      e["reason"] = d.reason;
    } else {
      const auto& pa = state.pairs[d.parent_a];
      const auto& pb = state.pairs[d.parent_b];
      Combination c = combine_ordered(pa.first(), pa.second(), pb.first(), pb.second());
      e["lines"] = Json{{"s", Json::array({to_json(c.pq), to_json(c.pq_bar_bar)})},
                        {"s_bar", Json::array({to_json(c.p_q_bar), to_json(c.p_bar_q)})}};
    }
    prov.push_back(std::move(e));
  }
  Json frontier = Json::array();
  for (const auto& [a, b] : state.frontier) frontier.push_back(Json::array({a, b}));

  Json out{{"curve", to_json(state.curve)},
           {"curve_source", std::string(to_string(state.curve_source))},
           {"closed", state.closed},
           {"rounds", state.rounds},
           {"pair_count", state.pairs.size()},
           {"point_count", state.point_count()},
           {"pairs", pairs},
           {"provenance", prov},
           {"frontier", frontier}};
  if (w) out["weierstrass"] = weierstrass_to_json(*w);
  return out;
}

ConstructionState state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("curve") || !j.contains("pairs")) bad("run report needs \"curve\" and \"pairs\"");
  ConstructionState state{cubic_from_json(j.at("curve")), CurveSource::Supplied, {}, {}, {}, {}, {}, false, 0};
  for (const auto& pj : j.at("pairs")) {
    const Json& pts = pj.at("points");
    if (!pts.is_array() || pts.size() != 2) bad("pair needs two points: " + pj.dump());
    state.pairs.emplace_back(point_from_json(pts[0]), point_from_json(pts[1]));
    state.generation.push_back(pj.value("generation", std::size_t{0}));
    state.is_seed.push_back(pj.value("seed", false));
  }
  if (j.contains("provenance")) {
    for (const auto& e : j.at("provenance")) {
      Derivation d{e.at("parents").at(0).get<std::size_t>(), e.at("parents").at(1).get<std::size_t>(),
                   std::nullopt, e.value("skipped", false), e.value("reason", std::string{})};
      if (!e.at("child").is_null()) d.child = e.at("child").get<std::size_t>();
      std::size_t n = state.pairs.size();
      if (d.parent_a >= n || d.parent_b >= n || (d.child && *d.child >= n)) bad("provenance index out of range");
      state.provenance.push_back(std::move(d));
    }
  }
  if (j.contains("frontier")) {
    for (const auto& f : j.at("frontier")) state.frontier.emplace_back(f.at(0).get<std::size_t>(), f.at(1).get<std::size_t>());
  }
  state.closed = j.value("closed", false);
  state.rounds = j.value("rounds", std::size_t{0});
  return state;
}

std::optional<WeierstrassCurve> weierstrass_of_state_json(const Json& j) {
  if (j.is_object() && j.contains("weierstrass")) return weierstrass_from_json(j.at("weierstrass"));
  return std::nullopt;
}

std::string state_to_csv(const ConstructionState& state) {
  std::string out = "pair,member,x,y,z\n";
  for (std::size_t i = 0; i < state.pairs.size(); ++i) {
    const auto& p = state.pairs[i];
    int member = 0;
    for (const ProjPoint* pt : {&p.first(), &p.second()}) {
      out += std::to_string(i) + "," + std::to_string(member++) + "," + (*pt)[0].get_str() + "," +
             (*pt)[1].get_str() + "," + (*pt)[2].get_str() + "\n";
    }
  }
  return out;
}

}  // namespace schroeter
