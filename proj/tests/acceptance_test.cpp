// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "schroeter/cli.hpp"
#include "schroeter/serialize.hpp"
#include "schroeter/theorems.hpp"
#include "support.hpp"

using namespace testkit;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

struct NamedRun {
  std::string name;
  ConstructionState state;
  std::optional<WeierstrassCurve> weierstrass;
};

// Seeds shared by several criteria, run once to the default 512-point cap.
const std::vector<NamedRun>& acceptance_runs() {
  static const std::vector<NamedRun> runs = [] {
    std::vector<NamedRun> out;
    std::mt19937_64 rng(2024);
    out.push_back({"frame (2,3),(5,1)", run(frame_seed(P(2, 3), P(5, 1))), std::nullopt});
    for (int i = 0; i < 2; ++i) {
      FrameSeed fs = rand_frame_seed(rng);
      out.push_back({"frame " + fs.c.to_string() + "," + fs.c_bar.to_string(), run(fs.seed), std::nullopt});
    }
    out.push_back({"y^2=x^3+x^2+2x", run(demo_curve_seed()), demo_curve()});
    for (int i = 0; i < 2; ++i) out.push_back({"general #" + std::to_string(i), run(rand_general_seed(rng, 5)), std::nullopt});
    return out;
  }();
  return runs;
}

// ---------------------------------------------------------------------------

std::string on_curve_invariant() {
  std::size_t points = 0;
  for (const auto& r : acceptance_runs()) {
    require(r.state.point_count() == 512 || r.state.closed, r.name + " stopped at " + std::to_string(r.state.point_count()));
    for (const auto& p : r.state.points()) {
      require(eval(r.state.curve, p) == 0, r.name + ": residual at " + p.to_string());
      ++points;
    }
  }
  require(acceptance_runs().size() >= 5, "fewer than 5 seeds");
  return std::to_string(acceptance_runs().size()) + " seeds, " + std::to_string(points) + " points, all residuals 0";
}

// The nine points A..F and the three barred partners, built directly from
// joins and meets.
struct Nine {
  std::vector<ProjPoint> nine;
  std::vector<ProjPoint> bars;
};

Nine nine_points(const SeedConfig& s) {
  Nine n;
  for (const auto& p : s.pairs) {
    n.nine.push_back(p.first());
    n.nine.push_back(p.second());
  }
  for (int i = 0; i < 3; ++i) {
    const auto& p = s.pairs[i];
    const auto& q = s.pairs[(i + 1) % 3];
    n.nine.push_back(meet(join(p.first(), q.first()), join(p.second(), q.second())));
    n.bars.push_back(meet(join(p.first(), q.second()), join(p.second(), q.first())));
  }
  return n;
}

std::string nine_point_fit_contains_bars() {
  std::mt19937_64 rng(7);
  int seeds = 0;
  for (; seeds < 25; ++seeds) {
    SeedConfig s = rand_general_seed(rng, 6);
    Nine n = nine_points(s);
    Cubic c = fit_cubic_9(n.nine);
    for (const auto& b : n.bars) require(c.contains(b), "barred point " + b.to_string() + " off the fitted cubic");
  }
  return std::to_string(seeds) + " random seeds";
}

std::string explicit_cubic_matches_fit() {
  std::mt19937_64 rng(8);
  int seeds = 0;
  for (; seeds < 25; ++seeds) {
    FrameSeed fs = rand_frame_seed(rng);
    Cubic fit = fit_cubic_9(nine_points(fs.seed).nine);
    Cubic expl = explicit_schroeter_cubic(fs.c, fs.c_bar);
    require(fit == expl, "mismatch for C=" + fs.c.to_string() + ": " + fit.to_string() + " vs " + expl.to_string());
  }
  return std::to_string(seeds) + " random normalized seeds";
}

std::string torsion_closure() {
  auto start = std::chrono::steady_clock::now();
  ConstructionState st = run(torsion_seed());
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  WeierstrassCurve w = torsion_curve();
  GroupOracle o{w.a(), w.b()};
  std::vector<Affine> gens;
  for (const auto& p : torsion_seed().pairs) {
    gens.push_back(GroupOracle::from_proj(p.first()));
    gens.push_back(GroupOracle::from_proj(p.second()));
  }
  std::set<ProjPoint> group = o.subgroup(gens);
  std::set<ProjPoint> expected{P(0, 1, 0), P(0, 0), P(-1, 0), P(-4, 0), P(2, 6), P(2, -6), P(-2, 2), P(-2, -2)};
  require(group == expected, "enumerated subgroup has " + std::to_string(group.size()) + " elements");
  require(st.closed, "construction did not close");
  for (const auto& p : st.points()) require(group.count(p) == 1, p.to_string() + " outside the torsion subgroup");
  require(ms < 1000.0, "took " + std::to_string(ms) + " ms");
  std::ostringstream msg;
  msg << "closed on " << st.point_count() << " points inside the 8-element subgroup in " << ms << " ms";
  return msg.str();
}

std::string tangent_thirds_agree() {
  const Cubic c = demo_curve().cubic();
  const ProjPoint golden = A(R(1, 16), R(23, 64));
  require(tangent_third(c, P(1, 2)) == golden, "tangent_third((1,2))");
  require(tangent_third(c, P(2, -4)) == golden, "tangent_third((2,-4))");
  std::size_t pairs = 0;
  std::vector<std::pair<Cubic, std::vector<PointPair>>> all;
  for (const auto& r : acceptance_runs()) all.emplace_back(r.state.curve, r.state.pairs);
  all.emplace_back(torsion_curve().cubic(), run(torsion_seed()).pairs);
  for (const auto& [curve, ps] : all) {
    for (const auto& p : ps) {
      require(tangent_third(curve, p.first()) == tangent_third(curve, p.second()), "pair " + p.to_string());
      ++pairs;
    }
  }
  return "golden (1/16,23/64); " + std::to_string(pairs) + " engine pairs";
}

std::string tangent_via_involution() {
  std::size_t matched = 0, coincident = 0, seeds = 0;
  for (const auto& r : acceptance_runs()) {
    const auto& ps = r.state.pairs;
    std::size_t here = 0;
    for (std::size_t k = 0; k < ps.size() && here < 12; ++k) {
      for (const ProjPoint& s : {ps[k].first(), ps[k].second()}) {
        bool done = false;
        for (std::size_t i = 0; i < ps.size() && !done; ++i) {
          for (std::size_t j = i + 1; j < ps.size() && !done; ++j) {
            if (i == k || j == k) continue;
            try {
              ProjLine got = prop6_tangent_via_involution(r.state.curve, s, ps[k].partner(s), ps[i], ps[j]);
              require(got == tangent_at(r.state.curve, s), r.name + ": tangent at " + s.to_string());
              done = true;
            } catch (const GeometryError& e) {
              require(e.kind() == ErrorKind::LinesNotDistinct, r.name + ": " + e.what());
              ++coincident;
            }
          }
        }
        if (done) ++here;
      }
    }
    matched += here;
    if (here > 0) ++seeds;
  }
  require(matched >= 50 && seeds >= 5, "only " + std::to_string(matched) + " points on " + std::to_string(seeds) + " seeds");
  bool reported = expect_kind(ErrorKind::LinesNotDistinct, [] {
    prop6_tangent_via_involution(torsion_curve().cubic(), P(2, 6), P(2, -6), pp(P(-2, 2), P(-2, -2)),
                                 pp(P(-1, 0), P(-4, 0)));
  });
  require(reported, "torsion coincidence not reported");
  return std::to_string(matched) + " points on " + std::to_string(seeds) + " seeds; torsion coincidence raises LinesNotDistinct";
}

std::string center_product() {
  AbcChart golden{R(1, 4), R(1, 4), R(1, 2)};
  CenterProduct g = lemma8_center_product(golden, {R(1), R(1)}, {R(16), R(23, 8)});
  require(g.product == R(1, 2), "golden product " + to_string(g.product));

  // Chart points generated by chords from the base point and its partners.
  WeierstrassCurve w = demo_curve();
  ChartResult cr = to_abc_chart(w, P(1, 2));
  require(cr.chart.alpha == golden.alpha && cr.chart.beta == golden.beta && cr.chart.gamma == golden.gamma,
          "chart coefficients");
  std::set<ProjPoint> seen;
  std::vector<ProjPoint> pts{P(1, 2), P(2, 4), P(2, -4), A(R(1, 16), R(23, 64))};
  for (std::size_t i = 0; i < pts.size() && pts.size() < 40; ++i)
    for (std::size_t j = 0; j < i && pts.size() < 40; ++j) {
      ProjPoint t = third_intersection(w.cubic(), pts[i], pts[j]);
      if (std::find(pts.begin(), pts.end(), t) == pts.end()) pts.push_back(t);
    }
  int checked = 0;
  for (const auto& p : pts) {
    ProjPoint q = cr.map.to_chart(p);
    if (!is_affine(q) || q == P(1, 1)) continue;
    auto [x, y] = affine_coords(q);
    try {
      CenterProduct r = lemma8_center_product(cr.chart, {R(1), R(1)}, {x, y});
      require(r.product == cr.chart.gamma, "product at " + q.to_string());
      ++checked;
    } catch (const GeometryError& e) {
      require(e.kind() == ErrorKind::DegenerateDirection, e.what());
    }
  }
  require(checked >= 10, "only " + std::to_string(checked) + " chord points");
  bool degenerate = expect_kind(ErrorKind::DegenerateDirection,
                                [&] { lemma8_center_product(golden, {R(1), R(1)}, {R(1, 2), R(1)}); });
  require(degenerate, "degenerate direction not reported");
  return "golden 1/2; " + std::to_string(checked) + " chord points; DegenerateDirection raised";
}

std::string chord_conjugate_golden() {
  WeierstrassCurve w = demo_curve();
  ProjPoint b = third_intersection(w.cubic(), P(1, 2), P(2, -4));
  require(b == P(32, -184), "third point " + b.to_string());
  require(conjugate_point(w, b) == A(R(1, 16), R(23, 64)), "conjugate of B");
  require(tangent_third(w.cubic(), P(1, 2)) == conjugate_point(w, b), "A#A");
  require(fact7_check(w, P(1, 2), b), "fact7_check");
  return "B=(32,-184), conj(B)=(1/16,23/64)=A#A";
}

std::string partners_differ_by_two_torsion() {
  std::size_t pairs = 0;
  const ProjPoint t = WeierstrassCurve::two_torsion();
  for (const auto& r : acceptance_runs()) {
    if (!r.weierstrass) continue;
    for (const auto& p : r.state.pairs) {
      require(subtract(*r.weierstrass, p.second(), p.first()) == t, r.name + ": " + p.to_string());
      ++pairs;
    }
  }
  std::mt19937_64 rng(9);
  for (int k = 0; k < 3; ++k) {
    for (;;) {
      auto [w, g] = rand_curve_with_point(rng);
      try {
        ProjPoint g2 = add(w, g, g), g3 = add(w, g2, g);
        ConstructionState st = run(seed_from_curve(w, g, g2, g3), RunOptions{60, 16, std::nullopt});
        for (const auto& p : st.pairs) {
          require(subtract(w, p.second(), p.first()) == t, p.to_string());
          ++pairs;
        }
        break;
      } catch (const GeometryError&) {
      }
    }
  }
  require(pairs >= 100, "only " + std::to_string(pairs) + " pairs");
  return std::to_string(pairs) + " pairs";
}

std::string involution_machinery() {
  std::mt19937_64 rng(10);
  int cases = 0;
  while (cases < 60) {
    ProjPoint c = rand_point(rng);
    std::vector<ProjLine> ls;
    while (ls.size() < 5) {
      ProjPoint q = rand_point(rng);
      if (q == c) continue;
      ProjLine l = join(c, q);
      if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
    }
    Involution inv(c, LinePair{ls[0], ls[1]}, LinePair{ls[2], ls[3]});
    const ProjLine& d = ls[4];
    ProjLine d_bar = conjugate_line(inv, d);
    require(conjugate_line(inv, d_bar) == d, "not self-inverse");
    require(d_bar == inv.algebraic_conjugate(d), "disagrees with the algebraic relation");
    int agreed = 0;
    for (int attempt = 0; attempt < 40 && agreed < 2; ++attempt) {
      ProjPoint dp = meet(d, ProjLine(rand_point(rng).coords()));
      ProjPoint u = rand_point(rng), v = rand_point(rng);
      if (u == dp || v == dp || dp == c) continue;
      try {
        require(conjugate_line(inv, d, dp, join(dp, u), join(dp, v)) == d_bar, "choice dependence");
        ++agreed;
      } catch (const GeometryError&) {
      }
    }
    require(agreed == 2, "no admissible explicit choices");
    ++cases;
  }

  int quads = 0, quadruples = 0;
  while (quads < 25) {
    ProjPoint a = rand_point(rng), ab = rand_point(rng), b = rand_point(rng), bb = rand_point(rng), p = rand_point(rng);
    std::optional<std::array<LinePair, 3>> found;
    try {
      found = conjugate_pairs_from_quadrangle(a, ab, b, bb, p);
    } catch (const GeometryError&) {
      continue;
    }
    const auto& pairs = *found;
    std::vector<ProjLine> lines, partner;
    for (const auto& lp : pairs) {
      lines.insert(lines.end(), {lp.first, lp.second});
      partner.insert(partner.end(), {lp.second, lp.first});
    }
    if (std::set<ProjLine>(lines.begin(), lines.end()).size() < 6) continue;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k)
          for (int l = k + 1; l < 6; ++l) {
            CrossRatio lhs = dual_cross_ratio(lines[i], lines[j], lines[k], lines[l], p);
            CrossRatio rhs = dual_cross_ratio(partner[i], partner[j], partner[k], partner[l], p);
            require(lhs == rhs, "cross-ratio mismatch");
            ++quadruples;
          }
    Involution inv(p, pairs[0], pairs[1]);
    require(verify_involution(inv, std::span<const LinePair>(&pairs[2], 1)), "verify_involution");
    ++quads;
  }
  return std::to_string(cases) + " conjugations; " + std::to_string(quads) + " quadrangle involutions, " +
         std::to_string(quadruples) + " quadruples";
}

std::string construct_is_deterministic() {
  fs::path dir = fs::temp_directory_path() / "schroeter_acceptance";
  fs::create_directories(dir);
  const std::string seed = (dir / "seed.json").string();
  std::ofstream(seed) << seed_to_json(frame_seed(P(2, 3), P(5, 1))).dump();
  auto construct = [&](const std::string& out, const std::string& shuffle) {
    std::vector<std::string> args{"schroeter", "construct", "--seed", seed, "--out", out, "--shuffle-seed", shuffle};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    require(run_cli(static_cast<int>(argv.size()), argv.data(), o, e) == 0, "construct failed: " + e.str());
    std::ifstream in(out, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  };
  std::string a = construct((dir / "a.json").string(), "1");
  std::string b = construct((dir / "b.json").string(), "987654321");
  fs::remove_all(dir);
  require(!a.empty() && a == b, "outputs differ");
  return std::to_string(a.size()) + " identical bytes";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"on-curve invariant over 512-point runs", on_curve_invariant},
      {"nine-point fit contains the barred points", nine_point_fit_contains_bars},
      {"explicit cubic equals the nine-point fit", explicit_cubic_matches_fit},
      {"torsion seed closure", torsion_closure},
      {"tangent thirds of partners agree", tangent_thirds_agree},
      {"tangent via involution", tangent_via_involution},
      {"chart center product", center_product},
      {"chord conjugate golden instance", chord_conjugate_golden},
      {"partners differ by the 2-torsion point", partners_differ_by_two_torsion},
      {"involution and cross-ratio machinery", involution_machinery},
      {"deterministic construct output", construct_is_deterministic},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, check] = criteria[i];
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      detail = check();
      ok = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << name << " (" << detail << ", "
              << secs << " s)" << std::endl;
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
