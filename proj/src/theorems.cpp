#include "schroeter/theorems.hpp"

#include "schroeter/error.hpp"

namespace schroeter {

namespace {

void require_on(const Cubic& curve, std::initializer_list<const ProjPoint*> pts) {
  for (const auto* p : pts) {
    if (!curve.contains(*p)) throw GeometryError(ErrorKind::NotOnCurve, p->to_string());
  }
}

Involution pencil_involution(const ProjPoint& carrier, const PointPair& p_pair,
                             const PointPair& q_pair) {
  for (const ProjPoint* x : {&p_pair.first(), &p_pair.second(), &q_pair.first(), &q_pair.second()}) {
    if (*x == carrier) {
      throw GeometryError(ErrorKind::LinesNotDistinct, "carrier " + carrier.to_string() + " is a pair member");
    }
  }
  LinePair a{join(carrier, p_pair.first()), join(carrier, p_pair.second())};
  LinePair b{join(carrier, q_pair.first()), join(carrier, q_pair.second())};
  const std::array<const ProjLine*, 4> ls{&a.first, &a.second, &b.first, &b.second};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*ls[i] == *ls[j]) {
        throw GeometryError(ErrorKind::LinesNotDistinct, "lines through " + carrier.to_string() + " coincide");
      }
  return Involution(carrier, std::move(a), std::move(b));
}

}  // namespace

bool chasles_check(const Cubic& curve, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                   const ProjPoint& a_bar, const ProjPoint& b_bar, const ProjPoint& c_bar) {
  require_on(curve, {&a, &b, &c, &a_bar, &b_bar, &c_bar});
  try {
    ProjPoint m1 = meet(join(a, b), join(a_bar, b_bar));
    ProjPoint m2 = meet(join(b, c), join(b_bar, c_bar));
    ProjPoint m3 = meet(join(c, a_bar), join(c_bar, a));
    if (!curve.contains(m1) || !curve.contains(m2)) return true;
    return curve.contains(m3);
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::IdenticalPoints || e.kind() == ErrorKind::IdenticalLines) {
      throw GeometryError(ErrorKind::DegenerateHexagon, e.what());
    }
    throw;
  }
}

bool lemma4a_check(const Cubic& curve, const ProjPoint& p, const ProjPoint& p_bar,
                   const ProjPoint& q, const ProjPoint& q_bar) {
  require_on(curve, {&p, &p_bar, &q, &q_bar});
  Combination c = combine_ordered(p, p_bar, q, q_bar);
  if (!curve.contains(c.s) || !curve.contains(c.s_bar)) {
    throw GeometryError(ErrorKind::HypothesisFailed, "S or S̄ is not on the curve");
  }
  return tangent_third(curve, p) == tangent_third(curve, p_bar) &&
         tangent_third(curve, q) == tangent_third(curve, q_bar) &&
         tangent_third(curve, c.s) == tangent_third(curve, c.s_bar);
}

bool lemma4b_check(const Cubic& curve, const ProjPoint& p, const ProjPoint& p_bar,
                   const ProjPoint& q) {
  require_on(curve, {&p, &p_bar, &q});
  if (tangent_third(curve, p) != tangent_third(curve, p_bar)) {
    throw GeometryError(ErrorKind::HypothesisFailed, "P#P differs from P̄#P̄");
  }
  ProjPoint s = sharp(curve, p, q);
  ProjPoint q_bar = sharp(curve, s, p_bar);
  return sharp(curve, p, q_bar) == sharp(curve, p_bar, q) &&
         tangent_third(curve, q) == tangent_third(curve, q_bar);
}

ProjLine prop6_tangent_via_involution(const Cubic& curve, const ProjPoint& s,
                                      const ProjPoint& s_bar, const PointPair& p_pair,
                                      const PointPair& q_pair) {
  require_on(curve, {&s, &s_bar, &p_pair.first(), &p_pair.second(), &q_pair.first(), &q_pair.second()});
  Involution inv = pencil_involution(s, p_pair, q_pair);
  return conjugate_line(inv, join(s, s_bar));
}

bool fact7_check(const WeierstrassCurve& w, const ProjPoint& a, const ProjPoint& b) {
  require_on(w.cubic(), {&a, &b});
  ProjPoint a_bar = conjugate_point(w, a);
  if (a == b || a_bar == b || !collinear(a, a_bar, b)) {
    throw GeometryError(ErrorKind::NotCollinear, "A, Ā, B are not three collinear points");
  }
  return tangent_third(w.cubic(), a) == conjugate_point(w, b);
}

bool fact9_check(const Cubic& curve, const ProjPoint& r, const PointPair& p_pair,
                 const PointPair& q_pair, const PointPair& s_pair) {
  require_on(curve, {&r, &s_pair.first(), &s_pair.second()});
  if (s_pair.contains(r)) {
    throw GeometryError(ErrorKind::LinesNotDistinct, "R is a member of the S pair");
  }
  Involution inv = pencil_involution(r, p_pair, q_pair);
  return conjugate_line(inv, join(r, s_pair.first())) == join(r, s_pair.second());
}

}  // namespace schroeter
