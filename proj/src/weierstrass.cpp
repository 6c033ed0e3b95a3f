#include "schroeter/weierstrass.hpp"

#include <vector>

#include "schroeter/error.hpp"

namespace schroeter {

namespace {

Cubic weierstrass_form(const Rat& a, const Rat& b) {
  std::array<Rat, Cubic::kTerms> k;
  for (auto& c : k) c = 0;
  k[0] = -1;  // x³
  k[2] = -a;  // x²z
  k[5] = -b;  // xz²
  k[7] = 1;   // y²z
  return Cubic::from_rationals(k);
}

void require_on(const WeierstrassCurve& w, const ProjPoint& p) {
  if (!w.contains(p)) throw GeometryError(ErrorKind::NotOnCurve, p.to_string());
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(Rat a, Rat b)
    : a_(std::move(a)), b_(std::move(b)), cubic_(weierstrass_form(a_, b_)) {
  if (b_ == 0 || a_ * a_ == 4 * b_) {
    throw GeometryError(ErrorKind::SingularCurve,
                        "a = " + to_string(a_) + ", b = " + to_string(b_));
  }
}

Cubic as_cubic(const WeierstrassCurve& w) { return w.cubic(); }

ProjPoint negate(const WeierstrassCurve& w, const ProjPoint& p) {
  require_on(w, p);
  const ProjPoint o = WeierstrassCurve::identity();
  return p == o ? o : third_intersection(w.cubic(), o, p);
}

ProjPoint add(const WeierstrassCurve& w, const ProjPoint& p, const ProjPoint& q) {
  require_on(w, p);
  require_on(w, q);
  return negate(w, sharp(w.cubic(), p, q));
}

ProjPoint subtract(const WeierstrassCurve& w, const ProjPoint& p, const ProjPoint& q) {
  return add(w, p, negate(w, q));
}

ProjPoint multiply(const WeierstrassCurve& w, long n, const ProjPoint& p) {
  ProjPoint base = n < 0 ? negate(w, p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  ProjPoint acc = WeierstrassCurve::identity();
  while (k) {
    if (k & 1) acc = add(w, acc, base);
    k >>= 1;
    if (k) base = add(w, base, base);
  }
  return acc;
}

ProjPoint conjugate_point(const WeierstrassCurve& w, const ProjPoint& p) {
  return add(w, p, WeierstrassCurve::two_torsion());
}

ProjPoint conjugate_point_closed_form(const WeierstrassCurve& w, const ProjPoint& p) {
  require_on(w, p);
  if (p == WeierstrassCurve::identity()) return WeierstrassCurve::two_torsion();
  if (p == WeierstrassCurve::two_torsion()) return WeierstrassCurve::identity();
  auto [x, y] = affine_coords(p);
  Rat bx = w.b() / x;
  return affine_point(bx, -y * w.b() / (x * x));
}

bool AbcChart::contains(const AffinePoint& p) const {
  const auto& [x, y] = p;
  return y * y * x == alpha + beta * x + gamma * x * x;
}

Cubic AbcChart::as_cubic() const {
  std::array<Rat, Cubic::kTerms> k;
  for (auto& c : k) c = 0;
  k[3] = 1;       // xy²
  k[2] = -gamma;  // x²z
  k[5] = -beta;   // xz²
  k[9] = -alpha;  // z³
  return Cubic::from_rationals(k);
}

ProjPoint ChartMap::to_chart(const ProjPoint& p) const {
  return ProjPoint::from_rationals(Rat(p[2]) * r0_ * r1_, Rat(p[1]) * r0_, Rat(p[0]) * r1_);
}

ProjPoint ChartMap::from_chart(const ProjPoint& p) const {
  return ProjPoint::from_rationals(Rat(p[2]) / r1_, Rat(p[1]) / r0_, Rat(p[0]) / (r0_ * r1_));
}

ChartResult to_abc_chart(const WeierstrassCurve& w, const ProjPoint& base) {
  require_on(w, base);
  auto [r0, r1] = affine_coords(base);
  if (r0 == 0 || r1 == 0) {
    throw GeometryError(ErrorKind::BasePointDegenerate, base.to_string());
  }
  Rat r1sq = r1 * r1;
  AbcChart chart{r0 * r0 * r0 / r1sq, w.a() * r0 * r0 / r1sq, w.b() * r0 / r1sq};
  return ChartResult{chart, ChartMap(r0, r1)};
}

AffinePoint chart_conjugate(const AbcChart& chart, const AffinePoint& p) {
  if (!chart.contains(p)) {
    throw GeometryError(ErrorKind::OffChartCurve, "(" + to_string(p[0]) + ", " + to_string(p[1]) + ")");
  }
  if (p[0] == 0 || chart.gamma == 0) throw GeometryError(ErrorKind::ZeroDenominator, "γ·x = 0");
  return {chart.alpha / (chart.gamma * p[0]), -p[1]};
}

CenterProduct lemma8_center_product(const AbcChart& chart, const AffinePoint& a, const AffinePoint& p) {
  for (const auto* q : {&a, &p}) {
    if (!chart.contains(*q)) {
      throw GeometryError(ErrorKind::OffChartCurve,
                          "(" + to_string((*q)[0]) + ", " + to_string((*q)[1]) + ")");
    }
  }
  const auto& [x0, y0] = a;
  const auto& [x1, y1] = p;
  AffinePoint a_bar = chart_conjugate(chart, a);
  AffinePoint p_bar = chart_conjugate(chart, p);
  if (p == a || p == a_bar) throw GeometryError(ErrorKind::DegenerateDirection, "P is A or Ā");
  if (x1 == x0) throw GeometryError(ErrorKind::DegenerateDirection, "AP parallel to x = 0");
  if (p_bar[0] == x0) throw GeometryError(ErrorKind::DegenerateDirection, "AP̄ parallel to x = 0");
  if (y1 == y0) throw GeometryError(ErrorKind::DegenerateDirection, "AP passes through the center");

  // Signed offsets along x = 0 of where the lines through A cross it.
  auto offset = [&](const AffinePoint& q) -> Rat { return -x0 * (q[1] - y0) / (q[0] - x0); };
  Rat s_p = offset(p);
  Rat s_p_bar = offset(p_bar);
  return CenterProduct{{Rat(0), y0}, s_p, s_p_bar, s_p * s_p_bar};
}

SeedConfig seed_from_curve(const WeierstrassCurve& w, const ProjPoint& a, const ProjPoint& b,
                           const ProjPoint& c) {
  std::vector<PointPair> pairs;
  for (const ProjPoint* p : {&a, &b, &c}) {
    require_on(w, *p);
    if (!is_affine(*p)) throw GeometryError(ErrorKind::NotAffine, p->to_string());
    ProjPoint bar = conjugate_point(w, *p);
    if (!is_affine(bar)) {
      throw GeometryError(ErrorKind::NotAffine, "conjugate of " + p->to_string() + " is the point at infinity");
    }
    pairs.emplace_back(*p, bar);
  }
  return validate_seed(pairs[0], pairs[1], pairs[2], w.cubic());
}

}  // namespace schroeter
