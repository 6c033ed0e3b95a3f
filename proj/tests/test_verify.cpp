#include <gtest/gtest.h>

#include "schroeter/svg.hpp"
#include "schroeter/verify.hpp"
#include "support.hpp"

using namespace testkit;

TEST(Verify, TorsionSeedAllSuitesPass) {
  ConstructionState st = run(torsion_seed());
  VerifyReport r = verify_state(st, torsion_curve());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(Outcome::Fail), 0u);
  // Every tangent check on the torsion seed hits the collinear coincidence.
  EXPECT_GT(r.count("tangents", Outcome::HypothesisFailed), 0u);
  EXPECT_GT(r.count("order2", Outcome::Pass), 0u);
  EXPECT_GT(r.count("fact7", Outcome::Pass), 0u);
}

TEST(Verify, GenericSeedTangents) {
  ConstructionState st = run(frame_seed(P(2, 3), P(5, 1)), RunOptions{64, 16, std::nullopt});
  VerifyReport r = verify_state(st, std::nullopt, "tangents");
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.count("tangents", Outcome::Pass), 50u);
}

TEST(Verify, GenericSeedAllSuites) {
  ConstructionState st = run(frame_seed(P(2, 3), P(5, 1)), RunOptions{40, 16, std::nullopt});
  VerifyReport r = verify_state(st, std::nullopt);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.count("chasles", Outcome::Pass), 0u);
  EXPECT_GT(r.count("lemma4", Outcome::Pass), 0u);
  EXPECT_GT(r.count("fact9", Outcome::Pass), 0u);
  EXPECT_EQ(r.count("lemma8", Outcome::Skipped), 1u);
}

TEST(Verify, WeierstrassSeedAllSuites) {
  ConstructionState st = run(demo_curve_seed(), RunOptions{40, 16, std::nullopt});
  VerifyReport r = verify_state(st, demo_curve());
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.count("lemma8", Outcome::Pass), 10u);
  EXPECT_EQ(r.count("order2", Outcome::Pass), st.pairs.size());
}

TEST(Verify, CorruptedPointIsReported) {
  ConstructionState st = run(frame_seed(P(2, 3), P(5, 1)), RunOptions{20, 16, std::nullopt});
  Json j = state_to_json(st);
  j["pairs"][3]["points"][0] = Json::array({"7", "7", "1"});
  ConstructionState bad = state_from_json(j);
  VerifyReport r = verify_state(bad, std::nullopt, "invariants");
  EXPECT_FALSE(r.ok());
  bool saw = false;
  for (const auto& rec : r.records)
    if (rec.outcome == Outcome::Fail && rec.witness.value("error", "") == "InvariantViolation") saw = true;
  EXPECT_TRUE(saw);
}

TEST(Verify, UnknownSuiteRejected) {
  ConstructionState st = run(torsion_seed());
  EXPECT_TRUE(expect_kind(ErrorKind::ParseError, [&] { verify_state(st, std::nullopt, "nope"); }));
}

TEST(Verify, ReportJsonShape) {
  ConstructionState st = run(torsion_seed());
  Json j = report_to_json(verify_state(st, torsion_curve(), "order2"));
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["summary"]["order2"]["pass"], 3);
  EXPECT_EQ(j["checks"][0]["outcome"], "pass");
  EXPECT_EQ(j["checks"][0]["witness"]["difference"], to_json(P(0, 0, 1)));
}

TEST(Svg, TorsionPlotMarksAllPoints) {
  ConstructionState st = run(torsion_seed());
  SvgResult svg = render_svg(st);
  std::size_t circles = 0;
  for (std::size_t pos = 0; (pos = svg.svg.find("<circle", pos)) != std::string::npos; ++pos) ++circles;
  EXPECT_EQ(circles, st.point_count());
  EXPECT_NE(svg.svg.find("fill=\"red\""), std::string::npos);
  EXPECT_NE(svg.svg.find("fill=\"blue\""), std::string::npos);
  EXPECT_NE(svg.svg.find("<path d=\"M"), std::string::npos);
}

TEST(Svg, TangentsDrawn) {
  ConstructionState st = run(frame_seed(P(2, 3), P(5, 1)), RunOptions{20, 16, std::nullopt});
  PlotOptions o;
  o.tangents = true;
  SvgResult svg = render_svg(st, o);
  EXPECT_NE(svg.svg.find("stroke=\"#2a2\""), std::string::npos);
}

TEST(Svg, EmptyPointSetGivesAxesOnly) {
  SvgResult svg = render_svg(std::nullopt, {}, {});
  EXPECT_EQ(svg.svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.svg.find("<line"), std::string::npos);
  EXPECT_EQ(svg.svg.find("<circle"), std::string::npos);
  EXPECT_EQ(svg.svg.find("<path"), std::string::npos);
  EXPECT_NE(svg.svg.find("</svg>"), std::string::npos);
}

TEST(Svg, RenderingLeavesExactDataAlone) {
  ConstructionState st = run(frame_seed(P(2, 3), P(5, 1)), RunOptions{30, 16, std::nullopt});
  std::string before = state_to_json(st).dump();
  render_svg(st);
  EXPECT_EQ(state_to_json(st).dump(), before);
}
