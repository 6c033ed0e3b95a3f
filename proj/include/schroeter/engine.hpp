#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schroeter/cubic.hpp"
#include "schroeter/involution.hpp"
#include "schroeter/projective.hpp"

namespace schroeter {

// Unordered pair {P, P̄} of distinct points, stored sorted so that equal
// pairs compare equal.
class PointPair {
 public:
  PointPair(ProjPoint p, ProjPoint q);

  const ProjPoint& first() const { return first_; }
  const ProjPoint& second() const { return second_; }
  bool contains(const ProjPoint& p) const { return p == first_ || p == second_; }
  // The member that is not p. p must be a member.
  const ProjPoint& partner(const ProjPoint& p) const { return p == first_ ? second_ : first_; }
  PointDuo duo() const { return {first_, second_}; }

  std::string to_string() const { return "{" + first_.to_string() + ", " + second_.to_string() + "}"; }

  friend bool operator==(const PointPair& a, const PointPair& b) {
    return a.first_ == b.first_ && a.second_ == b.second_;
  }
  friend bool operator!=(const PointPair& a, const PointPair& b) { return !(a == b); }
  friend bool operator<(const PointPair& a, const PointPair& b) {
    if (a.first_ != b.first_) return a.first_ < b.first_;
    return a.second_ < b.second_;
  }

 private:
  ProjPoint first_;
  ProjPoint second_;
};

struct SeedConfig {
  std::array<PointPair, 3> pairs;
  // Curve known in advance (e.g. a Weierstrass model). When present the
  // engine uses it instead of fitting, and a complete-quadrilateral pairing
  // is accepted: the construction then just closes on the six points.
  std::optional<Cubic> curve;
  bool complete_quadrilateral = false;
};

// Six distinct points, no four collinear, and not a complete-quadrilateral
// pairing unless `curve` is supplied (then all six must lie on it).
SeedConfig validate_seed(const PointPair& a, const PointPair& b, const PointPair& c,
                         std::optional<Cubic> curve = std::nullopt);

// S = PQ ∧ P̄Q̄ and S̄ = PQ̄ ∧ P̄Q with the four lines that produced them.
struct Combination {
  ProjPoint s;
  ProjPoint s_bar;
  ProjLine pq;
  ProjLine pq_bar_bar;  // P̄Q̄
  ProjLine p_q_bar;     // PQ̄
  ProjLine p_bar_q;     // P̄Q
};

Combination combine_ordered(const ProjPoint& p, const ProjPoint& p_bar, const ProjPoint& q,
                            const ProjPoint& q_bar);
PointPair combine(const PointPair& p, const PointPair& q);

struct DefPoints {
  ProjPoint d, e, f;
  ProjPoint d_bar, e_bar, f_bar;
  Cubic curve;
};

// D, E, F and partners from the seed, plus the cubic through the nine points
// A, Ā, B, B̄, C, C̄, D, E, F. Throws BarNotOnCurve if D̄, Ē or F̄ miss it.
DefPoints derive_def(const SeedConfig& seed);

enum class CurveSource { Supplied, NinePointFit, TwelvePointFit };
std::string_view to_string(CurveSource source);

struct RunOptions {
  std::size_t max_points = 512;
  std::size_t max_generations = 16;
  // Evaluate each round's combinations in a shuffled order. Output must not
  // depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

struct Derivation {
  std::size_t parent_a;  // indices into ConstructionState::pairs
  std::size_t parent_b;
  std::optional<std::size_t> child;
  bool skipped = false;
  std::string reason;  // error kind for skipped combinations
};

struct ConstructionState {
  Cubic curve;
  CurveSource curve_source = CurveSource::NinePointFit;
  std::vector<PointPair> pairs;           // canonical order
  std::vector<std::size_t> generation;    // per pair; seed pairs are 0
  std::vector<bool> is_seed;
  std::vector<Derivation> provenance;     // new children and skipped combinations
  std::vector<std::pair<std::size_t, std::size_t>> frontier;  // not yet combined
  bool closed = false;
  std::size_t rounds = 0;

  std::size_t point_count() const { return 2 * pairs.size(); }
  std::vector<ProjPoint> points() const;
};

// Breadth-first closure of the seed under combine. Each round combines every
// not yet visited pair of pairs, shallowest parents first (by generation
// sum); within one depth, new children are admitted in canonical order until
// max_points would be exceeded.
ConstructionState run(const SeedConfig& seed, const RunOptions& options = {});

}  // namespace schroeter
