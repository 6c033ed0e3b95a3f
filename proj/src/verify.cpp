#include "schroeter/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "schroeter/error.hpp"
#include "schroeter/theorems.hpp"

namespace schroeter {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::HypothesisFailed: return "hypothesis-failed";
    case Outcome::Skipped: return "skipped";
  }
  return "unknown";
}

std::size_t VerifyReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [o](const CheckRecord& r) { return r.outcome == o; }));
}

std::size_t VerifyReport::count(std::string_view suite, Outcome o) const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) {
    return r.suite == suite && r.outcome == o;
  }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"invariants", "chasles", "lemma4", "tangents",
                                              "fact7",      "fact9",   "lemma8", "order2"};
  return names;
}

namespace {

Json points_json(std::initializer_list<const ProjPoint*> pts) {
  Json a = Json::array();
  for (const auto* p : pts) a.push_back(to_json(*p));
  return a;
}

bool is_hypothesis_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::HypothesisFailed:
    case ErrorKind::LinesNotDistinct:
    case ErrorKind::DegenerateDirection:
    case ErrorKind::DegenerateHexagon:
    case ErrorKind::NotCollinear:
    case ErrorKind::SharedPoint:
    case ErrorKind::DegenerateLines:
    case ErrorKind::BasePointDegenerate:
      return true;
    default:
      return false;
  }
}

class Runner {
 public:
  Runner(const ConstructionState& state, const std::optional<WeierstrassCurve>& w,
         const VerifyOptions& options)
      : s_(state), curve_(state.curve), w_(w), opt_(options) {}

  VerifyReport report;

  void run(std::string_view suite) {
    if (suite == "invariants") invariants();
    else if (suite == "chasles") chasles();
    else if (suite == "lemma4") lemma4();
    else if (suite == "tangents") tangents();
    else if (suite == "fact7") fact7();
    else if (suite == "fact9") fact9();
    else if (suite == "lemma8") lemma8();
    else if (suite == "order2") order2();
    else throw GeometryError(ErrorKind::ParseError, "unknown suite: " + std::string(suite));
  }

 private:
  const ConstructionState& s_;
  const Cubic& curve_;
  const std::optional<WeierstrassCurve>& w_;
  VerifyOptions opt_;

  // Runs `body`, which returns the verdict and fills the witness. Errors that
  // signal a broken hypothesis become HypothesisFailed; anything else fails.
  void check(std::string suite, std::string name, Json inputs,
             const std::function<bool(Json&)>& body) {
    CheckRecord r{std::move(suite), std::move(name), Outcome::Pass, std::move(inputs), Json::object()};
    try {
      r.outcome = body(r.witness) ? Outcome::Pass : Outcome::Fail;
    } catch (const GeometryError& e) {
      r.outcome = is_hypothesis_kind(e.kind()) ? Outcome::HypothesisFailed : Outcome::Fail;
      r.witness["error"] = std::string(to_string(e.kind()));
      r.witness["detail"] = e.what();
    }
    report.records.push_back(std::move(r));
  }

  void skip(const std::string& suite, const std::string& why) {
    report.records.push_back(CheckRecord{suite, suite, Outcome::Skipped, Json::object(), Json{{"reason", why}}});
  }

  std::string pair_name(std::size_t i) const { return "pair " + std::to_string(i); }

  void invariants() {
    std::map<ProjPoint, std::size_t> owner;
    for (std::size_t i = 0; i < s_.pairs.size(); ++i) {
      const auto& p = s_.pairs[i];
      check("invariants", pair_name(i) + " on curve", points_json({&p.first(), &p.second()}), [&](Json& wit) {
        Int r0 = curve_.eval(p.first()), r1 = curve_.eval(p.second());
        wit["residuals"] = {r0.get_str(), r1.get_str()};
        if (r0 != 0 || r1 != 0) {
          throw GeometryError(ErrorKind::InvariantViolation, p.to_string() + " is off the curve");
        }
        return true;
      });
      for (const ProjPoint* pt : {&p.first(), &p.second()}) {
        auto [it, fresh] = owner.emplace(*pt, i);
        if (!fresh) {
          check("invariants", pair_name(it->second) + " and " + pair_name(i) + " disjoint",
                points_json({pt}), [&](Json& wit) -> bool {
                  wit["shared"] = to_json(*pt);
                  throw GeometryError(ErrorKind::InvariantViolation, "pairs share " + pt->to_string());
                });
        }
      }
    }
    for (const auto& d : s_.provenance) {
      if (d.skipped || !d.child) continue;
      const auto& a = s_.pairs[d.parent_a];
      const auto& b = s_.pairs[d.parent_b];
      const auto& c = s_.pairs[*d.child];
      check("invariants",
            "derivation " + std::to_string(d.parent_a) + "+" + std::to_string(d.parent_b) + "->" +
                std::to_string(*d.child),
            points_json({&a.first(), &a.second(), &b.first(), &b.second()}), [&](Json& wit) {
              PointPair got = combine(a, b);
              wit["recomputed"] = points_json({&got.first(), &got.second()});
              if (got != c) throw GeometryError(ErrorKind::InvariantViolation, "recorded child differs");
              return true;
            });
    }
  }

  // Pairs ordered seed first, then by generation and canonical index.
  std::vector<std::size_t> generation_order() const {
    std::vector<std::size_t> idx(s_.pairs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      std::size_t ga = a < s_.generation.size() ? s_.generation[a] : 0;
      std::size_t gb = b < s_.generation.size() ? s_.generation[b] : 0;
      return ga < gb;
    });
    return idx;
  }

  void chasles() {
    auto idx = generation_order();
    if (idx.size() > opt_.chasles_pairs) idx.resize(opt_.chasles_pairs);
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y)
        for (std::size_t z = y + 1; z < idx.size(); ++z)
          for (int flip = 0; flip < 4; ++flip) {
            const auto& pa = s_.pairs[idx[x]];
            const auto& pb = s_.pairs[idx[y]];
            const auto& pc = s_.pairs[idx[z]];
            const ProjPoint& a = pa.first();
            const ProjPoint& a_bar = pa.second();
            const ProjPoint& b = flip & 1 ? pb.second() : pb.first();
            const ProjPoint& b_bar = flip & 1 ? pb.first() : pb.second();
            const ProjPoint& c = flip & 2 ? pc.second() : pc.first();
            const ProjPoint& c_bar = flip & 2 ? pc.first() : pc.second();
            check("chasles",
                  "hexagon " + std::to_string(idx[x]) + "," + std::to_string(idx[y]) + "," +
                      std::to_string(idx[z]) + " orientation " + std::to_string(flip),
                  points_json({&a, &b, &c, &a_bar, &b_bar, &c_bar}), [&](Json& wit) {
                    bool ok = chasles_check(curve_, a, b, c, a_bar, b_bar, c_bar);
                    bool vacuous = !curve_.contains(meet(join(a, b), join(a_bar, b_bar))) ||
                                   !curve_.contains(meet(join(b, c), join(b_bar, c_bar)));
                    wit["vacuous"] = vacuous;
                    wit["conclusion"] = to_json(meet(join(c, a_bar), join(c_bar, a)));
                    return ok;
                  });
          }
  }

  void lemma4() {
    for (std::size_t i = 0; i < s_.pairs.size(); ++i) {
      const auto& p = s_.pairs[i];
      check("lemma4", pair_name(i) + " tangent thirds", points_json({&p.first(), &p.second()}), [&](Json& wit) {
        ProjPoint t0 = tangent_third(curve_, p.first());
        ProjPoint t1 = tangent_third(curve_, p.second());
        wit["tangent_thirds"] = points_json({&t0, &t1});
        return t0 == t1;
      });
    }
    for (const auto& d : s_.provenance) {
      if (d.skipped || !d.child) continue;
      const auto& a = s_.pairs[d.parent_a];
      const auto& b = s_.pairs[d.parent_b];
      std::string tag = std::to_string(d.parent_a) + "+" + std::to_string(d.parent_b);
      Json in = points_json({&a.first(), &a.second(), &b.first(), &b.second()});
      check("lemma4", "forward " + tag, in, [&](Json&) {
        return lemma4a_check(curve_, a.first(), a.second(), b.first(), b.second());
      });
      check("lemma4", "converse " + tag, in, [&](Json& wit) {
        bool ok = lemma4b_check(curve_, a.first(), a.second(), b.first());
        ProjPoint q_bar = sharp(curve_, sharp(curve_, a.first(), b.first()), a.second());
        wit["q_bar"] = to_json(q_bar);
        return ok && q_bar == b.second();
      });
    }
  }

  void tangents() {
    const std::size_t n = s_.pairs.size();
    for (std::size_t k = 0; k < n; ++k) {
      for (int member = 0; member < 2; ++member) {
        const ProjPoint& s = member ? s_.pairs[k].second() : s_.pairs[k].first();
        const ProjPoint& s_bar = s_.pairs[k].partner(s);
        check("tangents", pair_name(k) + " member " + std::to_string(member), points_json({&s, &s_bar}),
              [&](Json& wit) {
                std::optional<GeometryError> last;
                for (std::size_t i = 0; i < n; ++i) {
                  for (std::size_t j = i + 1; j < n; ++j) {
                    if (i == k || j == k) continue;
                    try {
                      ProjLine got = prop6_tangent_via_involution(curve_, s, s_bar, s_.pairs[i], s_.pairs[j]);
                      ProjLine want = tangent_at(curve_, s);
                      wit["helpers"] = {i, j};
                      wit["via_involution"] = to_json(got);
                      wit["tangent"] = to_json(want);
                      return got == want;
                    } catch (const GeometryError& e) {
                      if (e.kind() != ErrorKind::LinesNotDistinct) throw;
                      last = e;
                    }
                  }
                }
                if (last) throw *last;
                throw GeometryError(ErrorKind::HypothesisFailed, "fewer than two other pairs");
              });
      }
    }
  }

  void fact9() {
    const std::size_t n = s_.pairs.size();
    std::vector<ProjPoint> carriers;
    if (w_) carriers.push_back(WeierstrassCurve::two_torsion());
    for (const auto& p : s_.pairs) {
      carriers.push_back(p.first());
      carriers.push_back(p.second());
    }
    std::size_t done = 0;
    for (const auto& r : carriers) {
      if (done >= opt_.fact9_checks) break;
      if (!curve_.contains(r)) continue;
      // Helper pairs and target: the first three pairs not containing R.
      std::vector<std::size_t> use;
      for (std::size_t i = 0; i < n && use.size() < 3; ++i)
        if (!s_.pairs[i].contains(r)) use.push_back(i);
      if (use.size() < 3) continue;
      const auto& pp = s_.pairs[use[0]];
      const auto& qp = s_.pairs[use[1]];
      const auto& sp = s_.pairs[use[2]];
      check("fact9", "carrier " + r.to_string(),
            points_json({&r, &pp.first(), &pp.second(), &qp.first(), &qp.second(), &sp.first(), &sp.second()}),
            [&](Json&) { return fact9_check(curve_, r, pp, qp, sp); });
      ++done;
    }
  }

  bool require_weierstrass(const std::string& suite) {
    if (w_) return true;
    skip(suite, "needs a Weierstrass model");
    return false;
  }

  void fact7() {
    if (!require_weierstrass("fact7")) return;
    for (std::size_t i = 0; i < s_.pairs.size(); ++i) {
      for (int member = 0; member < 2; ++member) {
        const ProjPoint& a = member ? s_.pairs[i].second() : s_.pairs[i].first();
        check("fact7", pair_name(i) + " member " + std::to_string(member), points_json({&a}), [&](Json& wit) {
          ProjPoint a_bar = conjugate_point(*w_, a);
          ProjPoint b = third_intersection(curve_, a, a_bar);
          wit["b"] = to_json(b);
          return fact7_check(*w_, a, b);
        });
      }
    }
  }

  void lemma8() {
    if (!require_weierstrass("lemma8")) return;
    std::optional<ProjPoint> base;
    for (const auto& p : s_.points()) {
      if (is_affine(p) && p[0] != 0 && p[1] != 0) {
        base = p;
        break;
      }
    }
    if (!base) {
      skip("lemma8", "no affine point with nonzero coordinates");
      return;
    }
    ChartResult cr = to_abc_chart(*w_, *base);
    AffinePoint a{Rat(1), Rat(1)};
    std::size_t done = 0;
    for (const auto& p : s_.points()) {
      if (done >= opt_.lemma8_checks) break;
      if (p == *base) continue;
      ProjPoint q = cr.map.to_chart(p);
      if (!is_affine(q)) continue;
      auto [x, y] = affine_coords(q);
      check("lemma8", "point " + p.to_string(), points_json({&*base, &p}), [&](Json& wit) {
        CenterProduct r = lemma8_center_product(cr.chart, a, AffinePoint{x, y});
        wit["s_p"] = to_json(r.s_p);
        wit["s_p_bar"] = to_json(r.s_p_bar);
        wit["product"] = to_json(r.product);
        return r.product == cr.chart.gamma * a[0];
      });
      ++done;
    }
  }

  void order2() {
    if (!require_weierstrass("order2")) return;
    for (std::size_t i = 0; i < s_.pairs.size(); ++i) {
      const auto& p = s_.pairs[i];
      check("order2", pair_name(i), points_json({&p.first(), &p.second()}), [&](Json& wit) {
        ProjPoint d = subtract(*w_, p.second(), p.first());
        wit["difference"] = to_json(d);
        return d == WeierstrassCurve::two_torsion();
      });
    }
  }
};

}  // namespace

VerifyReport verify_state(const ConstructionState& state, const std::optional<WeierstrassCurve>& w,
                          std::string_view suite, const VerifyOptions& options) {
  Runner runner(state, w, options);
  if (suite == "all") {
    for (const auto& name : suite_names()) runner.run(name);
  } else {
    runner.run(suite);
  }
  return std::move(runner.report);
}

Json report_to_json(const VerifyReport& report) {
  Json summary = Json::object();
  Json checks = Json::array();
  for (const auto& r : report.records) {
    Json& s = summary[r.suite];
    if (s.is_null()) s = Json{{"pass", 0}, {"fail", 0}, {"hypothesis-failed", 0}, {"skipped", 0}};
    s[std::string(to_string(r.outcome))] = s[std::string(to_string(r.outcome))].get<std::size_t>() + 1;
    checks.push_back(Json{{"suite", r.suite},
                          {"name", r.name},
                          {"outcome", to_string(r.outcome)},
                          {"inputs", r.inputs},
                          {"witness", r.witness}});
  }
  return Json{{"ok", report.ok()}, {"summary", summary}, {"checks", checks}};
}

}  // namespace schroeter
