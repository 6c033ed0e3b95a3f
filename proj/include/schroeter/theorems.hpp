#pragma once

#include "schroeter/cubic.hpp"
#include "schroeter/engine.hpp"
#include "schroeter/weierstrass.hpp"

namespace schroeter {

// Hexagon A B C Ā B̄ C̄ on the curve: if AB ∧ ĀB̄ and BC ∧ B̄C̄ lie on it, so
// does CĀ ∧ C̄A. Vacuously true when a hypothesis meet is off the curve.
bool chasles_check(const Cubic& curve, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                   const ProjPoint& a_bar, const ProjPoint& b_bar, const ProjPoint& c_bar);

// With S = PQ ∧ P̄Q̄ and S̄ = PQ̄ ∧ P̄Q on the curve: P#P = P̄#P̄, Q#Q = Q̄#Q̄
// and S#S = S̄#S̄. HypothesisFailed if S or S̄ is off the curve.
bool lemma4a_check(const Cubic& curve, const ProjPoint& p, const ProjPoint& p_bar,
                   const ProjPoint& q, const ProjPoint& q_bar);

// Given P#P = P̄#P̄: with S = P#Q and Q̄ = S#P̄, P#Q̄ = P̄#Q and Q#Q = Q̄#Q̄.
bool lemma4b_check(const Cubic& curve, const ProjPoint& p, const ProjPoint& p_bar,
                   const ProjPoint& q);

// Conjugate of SS̄ under the involution at S with pairs (SP, SP̄), (SQ, SQ̄).
// Should be the tangent at S. LinesNotDistinct unless the four lines differ.
ProjLine prop6_tangent_via_involution(const Cubic& curve, const ProjPoint& s,
                                      const ProjPoint& s_bar, const PointPair& p_pair,
                                      const PointPair& q_pair);
inline ProjLine prop6_tangent_via_involution(const Cubic& curve, const PointPair& s_pair,
                                             const PointPair& p_pair, const PointPair& q_pair) {
  return prop6_tangent_via_involution(curve, s_pair.first(), s_pair.second(), p_pair, q_pair);
}

// A, Ā, B collinear implies A#A = B̄.
bool fact7_check(const WeierstrassCurve& w, const ProjPoint& a, const ProjPoint& b);

// RS and RS̄ are conjugate under the involution at R with pairs
// (RP, RP̄), (RQ, RQ̄).
bool fact9_check(const Cubic& curve, const ProjPoint& r, const PointPair& p_pair,
                 const PointPair& q_pair, const PointPair& s_pair);

}  // namespace schroeter
