#pragma once

#include <array>
#include <span>
#include <utility>

#include "schroeter/projective.hpp"

namespace schroeter {

struct LinePair {
  ProjLine first;
  ProjLine second;
};

using PointDuo = std::pair<ProjPoint, ProjPoint>;

// A line involution on the pencil through `carrier`, fixed by two pairs of
// conjugate lines. Alongside the ruler construction it keeps the induced
// symmetric relation  A·l·l' + B·(l·m' + m·l') + C·m·m' = 0  on pencil
// parameters (l : m), which gives an independent algebraic route.
class Involution {
 public:
  // Throws NotInPencil if a line misses the carrier and TooDegenerate unless
  // the four lines are pairwise distinct.
  Involution(ProjPoint carrier, LinePair a, LinePair b);

  const ProjPoint& carrier() const { return carrier_; }
  const LinePair& pair_a() const { return a_; }
  const LinePair& pair_b() const { return b_; }

  bool in_pencil(const ProjLine& l) const { return incident(l, carrier_); }

  ProjLine algebraic_conjugate(const ProjLine& d) const;

 private:
  std::array<Int, 2> parameter(const ProjLine& l) const;

  ProjPoint carrier_;
  LinePair a_;
  LinePair b_;
  Vec3 relation_;  // (A, B, C)
};

// Ruler construction of the conjugate line: pick D on d, two auxiliary lines
// through D cutting a, b in A, B and ā, b̄ in Ā, B̄; the answer is the join of
// the carrier with AB̄ ∧ ĀB. Choices are made deterministically, retrying on
// degenerate picks.
ProjLine conjugate_line(const Involution& inv, const ProjLine& d);

// Same construction with caller-supplied choices: `cut_ab` meets a and b,
// `cut_conj` meets ā and b̄, both through `d_point`. Throws DegenerateChoice
// for choices that do not yield a construction.
ProjLine conjugate_line(const Involution& inv, const ProjLine& d, const ProjPoint& d_point,
                        const ProjLine& cut_ab, const ProjLine& cut_conj);

// For the quadrangle A, Ā, B, B̄ with D = AB ∧ ĀB̄ and D̄ = AB̄ ∧ ĀB, the
// pairs (PA, PĀ), (PB, PB̄), (PD, PD̄) are conjugate under one involution.
std::array<LinePair, 3> conjugate_pairs_from_quadrangle(const ProjPoint& a, const ProjPoint& a_bar,
                                                        const ProjPoint& b, const ProjPoint& b_bar,
                                                        const ProjPoint& p);

// Checks cr(l1,l2,l3,l4) = cr(l̄1,l̄2,l̄3,l̄4) for every four lines drawn from
// three distinct pairs among the defining pairs and `pairs`.
bool verify_involution(const Involution& inv, std::span<const LinePair> pairs);

// True iff some labeling within the second and third pair makes the six
// points the three pairs of opposite vertices of one complete quadrilateral.
bool is_complete_quadrilateral_pairing(const PointDuo& pair_a, const PointDuo& pair_b,
                                       const PointDuo& pair_c);

}  // namespace schroeter
