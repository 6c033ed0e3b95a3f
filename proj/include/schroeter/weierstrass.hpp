#pragma once

#include <array>

#include "schroeter/cubic.hpp"
#include "schroeter/engine.hpp"
#include "schroeter/projective.hpp"

namespace schroeter {

// y² = x³ + a x² + b x, i.e. Y²Z = X³ + aX²Z + bXZ². The group law uses the
// inflection O = (0,1,0) as neutral element; T = (0,0,1) has order 2.
class WeierstrassCurve {
 public:
  // Throws SingularCurve unless b ≠ 0 and a² ≠ 4b.
  WeierstrassCurve(Rat a, Rat b);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Cubic& cubic() const { return cubic_; }
  bool contains(const ProjPoint& p) const { return cubic_.contains(p); }

  static ProjPoint identity() { return ProjPoint(0, 1, 0); }
  static ProjPoint two_torsion() { return ProjPoint(0, 0, 1); }

 private:
  Rat a_;
  Rat b_;
  Cubic cubic_;
};

Cubic as_cubic(const WeierstrassCurve& w);

// All group operations are derived from # on the cubic: -P = O # P and
// P + Q = -(P # Q).
ProjPoint negate(const WeierstrassCurve& w, const ProjPoint& p);
ProjPoint add(const WeierstrassCurve& w, const ProjPoint& p, const ProjPoint& q);
ProjPoint subtract(const WeierstrassCurve& w, const ProjPoint& p, const ProjPoint& q);
ProjPoint multiply(const WeierstrassCurve& w, long n, const ProjPoint& p);

// P̄ = P + T.
ProjPoint conjugate_point(const WeierstrassCurve& w, const ProjPoint& p);
// (x, y) -> (b/x, -y·b/x²), with O <-> T.
ProjPoint conjugate_point_closed_form(const WeierstrassCurve& w, const ProjPoint& p);

using AffinePoint = std::array<Rat, 2>;

// y²x = α + βx + γx².
struct AbcChart {
  Rat alpha;
  Rat beta;
  Rat gamma;

  bool contains(const AffinePoint& p) const;
  Cubic as_cubic() const;
};

// Projective bijection W -> chart: scale by (1/r0, 1/r1, 1), swap X and Z.
class ChartMap {
 public:
  ChartMap(Rat r0, Rat r1) : r0_(std::move(r0)), r1_(std::move(r1)) {}
  ProjPoint to_chart(const ProjPoint& p) const;
  ProjPoint from_chart(const ProjPoint& p) const;

 private:
  Rat r0_;
  Rat r1_;
};

struct ChartResult {
  AbcChart chart;
  ChartMap map;
};

// α = r0³/r1², β = a·r0²/r1², γ = b·r0/r1² for the base point (r0, r1),
// which the map sends to (1, 1).
ChartResult to_abc_chart(const WeierstrassCurve& w, const ProjPoint& base);

// (x, y) -> (α/(γx), -y).
AffinePoint chart_conjugate(const AbcChart& chart, const AffinePoint& p);

struct CenterProduct {
  AffinePoint center;  // (0, y0) on the line x = 0
  Rat s_p;             // signed offsets from the center of AP ∧ {x=0}
  Rat s_p_bar;         // and of AP̄ ∧ {x=0}
  Rat product;
};

// With A = (x0, y0) fixed, s_P · s_P̄ = γ·x0 for every admissible P.
// DegenerateDirection when AP or AP̄ is parallel to x = 0 or AP passes
// through the center.
CenterProduct lemma8_center_product(const AbcChart& chart, const AffinePoint& a, const AffinePoint& p);

// Pairs each of A, B, C with its conjugate and validates the result against
// the known curve.
SeedConfig seed_from_curve(const WeierstrassCurve& w, const ProjPoint& a, const ProjPoint& b,
                           const ProjPoint& c);

}  // namespace schroeter
