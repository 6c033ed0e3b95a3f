#include "schroeter/engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "schroeter/error.hpp"

namespace schroeter {

PointPair::PointPair(ProjPoint p, ProjPoint q) : first_(std::move(p)), second_(std::move(q)) {
  if (first_ == second_) throw GeometryError(ErrorKind::DuplicatePoints, first_.to_string());
  if (second_ < first_) std::swap(first_, second_);
}

SeedConfig validate_seed(const PointPair& a, const PointPair& b, const PointPair& c,
                         std::optional<Cubic> curve) {
  const std::array<const ProjPoint*, 6> pts{&a.first(), &a.second(), &b.first(),
                                            &b.second(), &c.first(),  &c.second()};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (*pts[i] == *pts[j]) throw GeometryError(ErrorKind::DuplicatePoints, pts[i]->to_string());

  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k)
        for (std::size_t l = k + 1; l < 6; ++l) {
          if (collinear(*pts[i], *pts[j], *pts[k]) && collinear(*pts[i], *pts[j], *pts[l])) {
            throw GeometryError(ErrorKind::FourCollinear,
                                pts[i]->to_string() + ", " + pts[j]->to_string() + ", " +
                                    pts[k]->to_string() + ", " + pts[l]->to_string());
          }
        }

  bool quad = is_complete_quadrilateral_pairing(a.duo(), b.duo(), c.duo());
  if (quad && !curve) {
    throw GeometryError(ErrorKind::CompleteQuadrilateral,
                        "pairs are opposite vertices of one complete quadrilateral");
  }
  if (curve) {
    for (const auto* p : pts) {
      if (!curve->contains(*p)) throw GeometryError(ErrorKind::NotOnCurve, p->to_string());
    }
  }
  return SeedConfig{{a, b, c}, std::move(curve), quad};
}

Combination combine_ordered(const ProjPoint& p, const ProjPoint& p_bar, const ProjPoint& q,
                            const ProjPoint& q_bar) {
  const std::array<const ProjPoint*, 4> pts{&p, &p_bar, &q, &q_bar};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j]) throw GeometryError(ErrorKind::SharedPoint, pts[i]->to_string());

  ProjLine pq = join(p, q);
  ProjLine pq_bb = join(p_bar, q_bar);
  ProjLine p_qb = join(p, q_bar);
  ProjLine pb_q = join(p_bar, q);
  if (pq == pq_bb || p_qb == pb_q) {
    throw GeometryError(ErrorKind::DegenerateLines, "four collinear points");
  }
  ProjPoint s = meet(pq, pq_bb);
  ProjPoint s_bar = meet(p_qb, pb_q);
  if (s == s_bar) throw GeometryError(ErrorKind::DegenerateLines, "S coincides with S̄");
  return Combination{s, s_bar, pq, pq_bb, p_qb, pb_q};
}

PointPair combine(const PointPair& p, const PointPair& q) {
  Combination c = combine_ordered(p.first(), p.second(), q.first(), q.second());
  return PointPair(c.s, c.s_bar);
}

DefPoints derive_def(const SeedConfig& seed) {
  const auto& [pa, pb, pc] = seed.pairs;
  Combination d = combine_ordered(pa.first(), pa.second(), pb.first(), pb.second());
  Combination e = combine_ordered(pb.first(), pb.second(), pc.first(), pc.second());
  Combination f = combine_ordered(pc.first(), pc.second(), pa.first(), pa.second());

  std::array<ProjPoint, 9> nine{pa.first(),  pa.second(), pb.first(), pb.second(), pc.first(),
                                pc.second(), d.s,         e.s,        f.s};
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j)
      if (nine[i] == nine[j]) throw GeometryError(ErrorKind::DegenerateNine, nine[i].to_string());

  Cubic curve = fit_cubic_9(nine);
  for (const ProjPoint* bar : {&d.s_bar, &e.s_bar, &f.s_bar}) {
    if (!curve.contains(*bar)) throw GeometryError(ErrorKind::BarNotOnCurve, bar->to_string());
  }
  return DefPoints{d.s, e.s, f.s, d.s_bar, e.s_bar, f.s_bar, curve};
}

std::string_view to_string(CurveSource source) {
  switch (source) {
    case CurveSource::Supplied: return "supplied";
    case CurveSource::NinePointFit: return "nine-point-fit";
    case CurveSource::TwelvePointFit: return "twelve-point-fit";
  }
  return "unknown";
}

std::vector<ProjPoint> ConstructionState::points() const {
  std::vector<ProjPoint> out;
  out.reserve(point_count());
  for (const auto& p : pairs) {
    out.push_back(p.first());
    out.push_back(p.second());
  }
  return out;
}

namespace {

std::pair<Cubic, CurveSource> resolve_curve(const SeedConfig& seed) {
  if (seed.curve) return {*seed.curve, CurveSource::Supplied};
  try {
    return {derive_def(seed).curve, CurveSource::NinePointFit};
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::DegenerateNine && e.kind() != ErrorKind::AmbiguousFit) throw;
    // Coincidences among the nine points: all twelve still lie on the curve,
    // so fit through the distinct ones.
    const auto& [pa, pb, pc] = seed.pairs;
    std::vector<ProjPoint> pts{pa.first(), pa.second(), pb.first(), pb.second(), pc.first(), pc.second()};
    try {
      for (const auto& [x, y] : {std::pair{&pa, &pb}, std::pair{&pb, &pc}, std::pair{&pc, &pa}}) {
        Combination c = combine_ordered(x->first(), x->second(), y->first(), y->second());
        pts.push_back(c.s);
        pts.push_back(c.s_bar);
      }
    } catch (const GeometryError&) {
      throw e;
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    try {
      return {fit_cubic(pts), CurveSource::TwelvePointFit};
    } catch (const GeometryError&) {
      throw e;
    }
  }
}

struct Candidate {
  std::size_t parent_a;
  std::size_t parent_b;
};

}  // namespace

ConstructionState run(const SeedConfig& seed, const RunOptions& options) {
  const auto resolved = resolve_curve(seed);
  const Cubic& curve = resolved.first;

  // Working storage uses insertion ids; the report is remapped to canonical
  // order at the end. Insertion order is itself deterministic because each
  // round admits children sorted canonically.
  std::vector<PointPair> pairs;
  std::vector<std::size_t> gens;
  std::map<PointPair, std::size_t> pair_ids;
  std::map<ProjPoint, std::size_t> owner;
  std::vector<Derivation> provenance;
  std::set<std::pair<std::size_t, std::size_t>> visited;

  auto admit = [&](const PointPair& pp, std::size_t gen) {
    for (const ProjPoint* pt : {&pp.first(), &pp.second()}) {
      if (!curve.contains(*pt)) {
        throw GeometryError(ErrorKind::InvariantViolation, "constructed point off the curve: " + pt->to_string());
      }
      auto it = owner.find(*pt);
      if (it != owner.end()) {
        throw GeometryError(ErrorKind::InvariantViolation,
                            pp.to_string() + " shares a point with " + pairs[it->second].to_string());
      }
    }
    std::size_t id = pairs.size();
    pairs.push_back(pp);
    gens.push_back(gen);
    pair_ids.emplace(pp, id);
    owner.emplace(pp.first(), id);
    owner.emplace(pp.second(), id);
    return id;
  };

  for (const auto& p : seed.pairs) admit(p, 0);

  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  bool truncated = false;
  std::size_t rounds = 0;
  const std::size_t max_pairs = std::max<std::size_t>(options.max_points / 2, seed.pairs.size());

  while (rounds < options.max_generations) {
    // Unvisited combinations, bucketed by the parents' generation sum so that
    // a capped round spends its budget on the shallowest candidates first.
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> buckets;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (!visited.count({i, j})) buckets[gens[i] + gens[j]].emplace_back(i, j);
    if (buckets.empty()) break;
    ++rounds;

    for (auto& [depth, combos] : buckets) {
      if (options.shuffle_seed) std::shuffle(combos.begin(), combos.end(), rng);
      std::map<PointPair, Candidate> children;
      for (const auto& [i, j] : combos) {
        visited.insert({i, j});
        try {
          PointPair child = combine(pairs[i], pairs[j]);
          if (pair_ids.count(child)) continue;
          auto [it, fresh] = children.try_emplace(child, Candidate{i, j});
          if (!fresh && std::pair{i, j} < std::pair{it->second.parent_a, it->second.parent_b}) {
            it->second = Candidate{i, j};
          }
        } catch (const GeometryError& e) {
          if (e.kind() != ErrorKind::SharedPoint && e.kind() != ErrorKind::DegenerateLines) throw;
          provenance.push_back(Derivation{i, j, std::nullopt, true, std::string(to_string(e.kind()))});
        }
      }
      for (const auto& [child, cand] : children) {
        if (pairs.size() >= max_pairs) {
          truncated = true;
          break;
        }
        std::size_t id = admit(child, rounds);
        provenance.push_back(Derivation{cand.parent_a, cand.parent_b, id, false, {}});
      }
      if (truncated) break;
    }
    if (truncated) break;
  }

  ConstructionState state{curve, resolved.second, {}, {}, {}, {}, {}, false, rounds};

  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pairs[a] < pairs[b]; });
  std::vector<std::size_t> rank(pairs.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

  for (std::size_t k : order) {
    state.pairs.push_back(pairs[k]);
    state.generation.push_back(gens[k]);
    state.is_seed.push_back(gens[k] == 0);
  }
  for (auto d : provenance) {
    std::size_t a = rank[d.parent_a], b = rank[d.parent_b];
    d.parent_a = std::min(a, b);
    d.parent_b = std::max(a, b);
    if (d.child) d.child = rank[*d.child];
    state.provenance.push_back(std::move(d));
  }
  std::sort(state.provenance.begin(), state.provenance.end(), [](const Derivation& x, const Derivation& y) {
    return std::tie(x.parent_a, x.parent_b) < std::tie(y.parent_a, y.parent_b);
  });

  for (std::size_t j = 0; j < pairs.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!visited.count({i, j})) {
        std::size_t a = rank[i], b = rank[j];
        state.frontier.emplace_back(std::min(a, b), std::max(a, b));
      }
  std::sort(state.frontier.begin(), state.frontier.end());
  state.closed = !truncated && state.frontier.empty();
  return state;
}

}  // namespace schroeter
