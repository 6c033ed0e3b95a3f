#pragma once

// Shared generators and independent oracles for the test suites.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "schroeter/cubic.hpp"
#include "schroeter/engine.hpp"
#include "schroeter/error.hpp"
#include "schroeter/projective.hpp"
#include "schroeter/weierstrass.hpp"

namespace testkit {

using namespace schroeter;

inline ProjPoint P(long x, long y, long z = 1) { return ProjPoint(Int(x), Int(y), Int(z)); }
inline ProjLine L(long u, long v, long w) { return ProjLine(Int(u), Int(v), Int(w)); }
inline Rat R(long n, long d = 1) { return make_rat(Int(n), Int(d)); }
inline ProjPoint A(const Rat& x, const Rat& y) { return affine_point(x, y); }

inline Int rand_int(std::mt19937_64& rng, long lo, long hi) {
  return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline Rat rand_rat(std::mt19937_64& rng, long range = 9, long max_den = 5) {
  long d = std::uniform_int_distribution<long>(1, max_den)(rng);
  return make_rat(rand_int(rng, -range * d, range * d), Int(d));
}

inline ProjPoint rand_point(std::mt19937_64& rng, long range = 6) {
  for (;;) {
    Int x = rand_int(rng, -range, range), y = rand_int(rng, -range, range), z = rand_int(rng, -range, range);
    if (x != 0 || y != 0 || z != 0) return ProjPoint(x, y, z);
  }
}

template <class F>
auto expect_kind(ErrorKind kind, F&& f) -> bool {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind() == kind;
  }
  return false;
}

// ---------------------------------------------------------------- group law
// Textbook affine chord-slope formulas for y² = x³ + a x² + b x. Independent of
// the library's third-intersection code; nullopt is the neutral element.
using Affine = std::optional<std::pair<Rat, Rat>>;

struct GroupOracle {
  Rat a, b;

  bool on(const Affine& p) const {
    if (!p) return true;
    const auto& [x, y] = *p;
    return y * y == x * x * x + a * x * x + b * x;
  }

  Affine neg(const Affine& p) const {
    if (!p) return p;
    return std::pair{p->first, Rat(-p->second)};
  }

  Affine add(const Affine& p, const Affine& q) const {
    if (!p) return q;
    if (!q) return p;
    const auto& [x1, y1] = *p;
    const auto& [x2, y2] = *q;
    Rat lam;
    if (x1 == x2) {
      if (y1 + y2 == 0) return std::nullopt;
      lam = (3 * x1 * x1 + 2 * a * x1 + b) / (2 * y1);
    } else {
      lam = (y2 - y1) / (x2 - x1);
    }
    Rat x3 = lam * lam - a - x1 - x2;
    Rat y3 = -(y1 + lam * (x3 - x1));
    return std::pair{x3, y3};
  }

  Affine mul(long n, const Affine& p) const {
    Affine acc;
    Affine base = n < 0 ? neg(p) : p;
    for (long k = n < 0 ? -n : n; k > 0; --k) acc = add(acc, base);
    return acc;
  }

  static ProjPoint to_proj(const Affine& p) {
    return p ? affine_point(p->first, p->second) : ProjPoint(0, 1, 0);
  }
  static Affine from_proj(const ProjPoint& p) {
    if (p[2] == 0) return std::nullopt;
    auto [x, y] = affine_coords(p);
    return std::pair{x, y};
  }

  // Closure of `gens` under addition and negation, capped at `limit`.
  std::set<ProjPoint> subgroup(const std::vector<Affine>& gens, std::size_t limit = 64) const {
    std::vector<Affine> pts{std::nullopt};
    std::set<ProjPoint> seen{to_proj(std::nullopt)};
    auto push = [&](const Affine& p) {
      if (seen.insert(to_proj(p)).second) pts.push_back(p);
    };
    for (const auto& g : gens) push(g);
    for (std::size_t i = 0; i < pts.size() && pts.size() < limit; ++i) {
      push(neg(pts[i]));
      for (std::size_t j = 0; j <= i && pts.size() < limit; ++j) push(add(pts[i], pts[j]));
    }
    return seen;
  }
};

// A nonsingular curve y² = x³ + a x² + b x through a random affine point,
// returned with that point.
inline std::pair<WeierstrassCurve, ProjPoint> rand_curve_with_point(std::mt19937_64& rng) {
  for (;;) {
    Rat a = rand_rat(rng, 4, 2);
    Rat x = rand_rat(rng, 5, 3), y = rand_rat(rng, 5, 3);
    if (x == 0) continue;
    Rat b = (y * y - x * x * x - a * x * x) / x;
    if (b == 0 || a * a == 4 * b) continue;
    return {WeierstrassCurve(a, b), affine_point(x, y)};
  }
}

// ---------------------------------------------------------------- seeds
inline PointPair pp(const ProjPoint& p, const ProjPoint& q) { return PointPair(p, q); }

// A=(0,0,1), Ā=(0,1,0), B=(1,0,0), B̄=(1,1,1) plus the given C, C̄.
inline SeedConfig frame_seed(const ProjPoint& c, const ProjPoint& c_bar) {
  return validate_seed(pp(P(0, 0, 1), P(0, 1, 0)), pp(P(1, 0, 0), P(1, 1, 1)), pp(c, c_bar));
}

// Random normalized seed whose nine points A..F are pairwise distinct. The
// affine C, C̄ are returned alongside.
struct FrameSeed {
  SeedConfig seed;
  ProjPoint c, c_bar;
};

inline FrameSeed rand_frame_seed(std::mt19937_64& rng) {
  for (;;) {
    ProjPoint c = affine_point(rand_rat(rng, 6, 3), rand_rat(rng, 6, 3));
    ProjPoint c_bar = affine_point(rand_rat(rng, 6, 3), rand_rat(rng, 6, 3));
    try {
      SeedConfig s = frame_seed(c, c_bar);
      derive_def(s);
      return FrameSeed{s, c, c_bar};
    } catch (const GeometryError&) {
    }
  }
}

// Six random integer points forming a seed with nine distinct points A..F.
inline SeedConfig rand_general_seed(std::mt19937_64& rng, long range = 7) {
  for (;;) {
    try {
      SeedConfig s = validate_seed(pp(rand_point(rng, range), rand_point(rng, range)),
                                   pp(rand_point(rng, range), rand_point(rng, range)),
                                   pp(rand_point(rng, range), rand_point(rng, range)));
      derive_def(s);
      return s;
    } catch (const GeometryError&) {
    }
  }
}

inline WeierstrassCurve torsion_curve() { return WeierstrassCurve(R(5), R(4)); }

inline SeedConfig torsion_seed() {
  return seed_from_curve(torsion_curve(), P(2, 6), P(-2, 2), P(-1, 0));
}

// y² = x³ + x² + 2x seeded with (1,2), (2,4), (1/16, 23/64).
inline WeierstrassCurve demo_curve() { return WeierstrassCurve(R(1), R(2)); }

inline SeedConfig demo_curve_seed() {
  return seed_from_curve(demo_curve(), P(1, 2), P(2, 4), A(R(1, 16), R(23, 64)));
}

// ---------------------------------------------------------------- cross-ratio
// Dual bracket formula for four concurrent lines: with the carrier c as the
// reference vector, [ij] = det(l_i, l_j, c) and cr = [13][24] / ([14][23]).
inline CrossRatio dual_cross_ratio(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3,
                                   const ProjLine& l4, const ProjPoint& carrier) {
  auto br = [&](const ProjLine& x, const ProjLine& y) { return det3(x.coords(), y.coords(), carrier.coords()); };
  return CrossRatio::from_fraction(br(l1, l3) * br(l2, l4), br(l1, l4) * br(l2, l3));
}

}  // namespace testkit
