#include "schroeter/involution.hpp"

#include <algorithm>
#include <vector>

#include "schroeter/error.hpp"

namespace schroeter {

namespace {

// Coordinates (l, m) of w in the span of u and v, up to a common factor.
std::array<Int, 2> span_coords(const Vec3& u, const Vec3& v, const Vec3& w) {
  Vec3 uv = cross(u, v);
  std::size_t j = 0, k = 1;
  if (uv[2] != 0) {
    j = 0, k = 1;
  } else if (uv[1] != 0) {
    j = 2, k = 0;
  } else {
    j = 1, k = 2;
  }
  return {w[j] * v[k] - w[k] * v[j], u[j] * w[k] - u[k] * w[j]};
}

Int height(const ProjPoint& p) {
  Int h = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    Int a = abs(p[i]);
    if (a > h) h = a;
  }
  return h;
}

}  // namespace

Involution::Involution(ProjPoint carrier, LinePair a, LinePair b)
    : carrier_(std::move(carrier)), a_(std::move(a)), b_(std::move(b)), relation_{0, 0, 0} {
  const std::array<const ProjLine*, 4> lines{&a_.first, &a_.second, &b_.first, &b_.second};
  for (const auto* l : lines) {
    if (!in_pencil(*l)) {
      throw GeometryError(ErrorKind::NotInPencil,
                          l->to_string() + " misses carrier " + carrier_.to_string());
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (*lines[i] == *lines[j]) {
        throw GeometryError(ErrorKind::TooDegenerate, "defining lines are not pairwise distinct");
      }
    }
  }
  auto equation = [this](const LinePair& p) -> Vec3 {
    auto s = parameter(p.first);
    auto t = parameter(p.second);
    return {s[0] * t[0], s[0] * t[1] + s[1] * t[0], s[1] * t[1]};
  };
  relation_ = cross(equation(a_), equation(b_));
}

std::array<Int, 2> Involution::parameter(const ProjLine& l) const {
  return span_coords(a_.first.coords(), b_.first.coords(), l.coords());
}

ProjLine Involution::algebraic_conjugate(const ProjLine& d) const {
  if (!in_pencil(d)) throw GeometryError(ErrorKind::NotInPencil, d.to_string());
  auto s = parameter(d);
  const auto& [ca, cb, cc] = relation_;
  Int l = cb * s[0] + cc * s[1];
  Int m = -(ca * s[0] + cb * s[1]);
  const Vec3& u = a_.first.coords();
  const Vec3& v = b_.first.coords();
  Vec3 w{l * u[0] + m * v[0], l * u[1] + m * v[1], l * u[2] + m * v[2]};
  if (w[0] == 0 && w[1] == 0 && w[2] == 0) {
    throw GeometryError(ErrorKind::DegenerateChoice, "degenerate involution relation");
  }
  return ProjLine(w);
}

ProjLine conjugate_line(const Involution& inv, const ProjLine& d, const ProjPoint& d_point,
                        const ProjLine& cut_ab, const ProjLine& cut_conj) {
  if (!inv.in_pencil(d)) throw GeometryError(ErrorKind::NotInPencil, d.to_string());
  const ProjPoint& carrier = inv.carrier();
  if (d_point == carrier || !incident(d, d_point)) {
    throw GeometryError(ErrorKind::DegenerateChoice, "D must be a point of d other than the carrier");
  }
  if (!incident(cut_ab, d_point) || !incident(cut_conj, d_point) || cut_ab == cut_conj ||
      incident(cut_ab, carrier) || incident(cut_conj, carrier)) {
    throw GeometryError(ErrorKind::DegenerateChoice, "auxiliary lines unusable");
  }
  try {
    ProjPoint pa = meet(cut_ab, inv.pair_a().first);
    ProjPoint pb = meet(cut_ab, inv.pair_b().first);
    ProjPoint pa_bar = meet(cut_conj, inv.pair_a().second);
    ProjPoint pb_bar = meet(cut_conj, inv.pair_b().second);
    ProjPoint d_bar = meet(join(pa, pb_bar), join(pa_bar, pb));
    return join(carrier, d_bar);
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorKind::DegenerateChoice, e.what());
  }
}

ProjLine conjugate_line(const Involution& inv, const ProjLine& d) {
  if (!inv.in_pencil(d)) throw GeometryError(ErrorKind::NotInPencil, d.to_string());
  const ProjPoint& carrier = inv.carrier();

  static const std::array<Vec3, 9> kCutters{{{1, 0, 0},
                                             {0, 1, 0},
                                             {0, 0, 1},
                                             {1, 1, 0},
                                             {1, -1, 0},
                                             {1, 0, 1},
                                             {0, 1, 1},
                                             {1, 1, 1},
                                             {1, 2, 3}}};
  static const std::array<Vec3, 9> kAnchors{{{1, 0, 0},
                                             {0, 1, 0},
                                             {0, 0, 1},
                                             {1, 1, 1},
                                             {1, -1, 1},
                                             {2, 1, 1},
                                             {1, 2, 1},
                                             {3, -2, 1},
                                             {-1, 3, 2}}};

  std::vector<ProjPoint> d_points;
  for (const auto& c : kCutters) {
    ProjLine cutter(c);
    if (cutter == d) continue;
    ProjPoint p = meet(d, cutter);
    if (p == carrier) continue;
    if (std::find(d_points.begin(), d_points.end(), p) == d_points.end()) d_points.push_back(p);
  }
  std::stable_sort(d_points.begin(), d_points.end(), [](const ProjPoint& x, const ProjPoint& y) {
    int c = cmp(height(x), height(y));
    return c != 0 ? c < 0 : x < y;
  });

  for (const auto& dp : d_points) {
    std::vector<ProjLine> cuts;
    for (const auto& a : kAnchors) {
      ProjPoint anchor(a);
      if (anchor == dp) continue;
      ProjLine l = join(dp, anchor);
      if (incident(l, carrier)) continue;
      if (std::find(cuts.begin(), cuts.end(), l) == cuts.end()) cuts.push_back(l);
    }
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      for (std::size_t j = 0; j < cuts.size(); ++j) {
        if (i == j) continue;
        try {
          return conjugate_line(inv, d, dp, cuts[i], cuts[j]);
        } catch (const GeometryError& e) {
          if (e.kind() != ErrorKind::DegenerateChoice) throw;
        }
      }
    }
  }
  throw GeometryError(ErrorKind::DegenerateChoice, "no admissible construction for " + d.to_string());
}

std::array<LinePair, 3> conjugate_pairs_from_quadrangle(const ProjPoint& a, const ProjPoint& a_bar,
                                                        const ProjPoint& b, const ProjPoint& b_bar,
                                                        const ProjPoint& p) {
  const std::array<const ProjPoint*, 4> q{&a, &a_bar, &b, &b_bar};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*q[i] == *q[j]) throw GeometryError(ErrorKind::DuplicatePoints, q[i]->to_string());

  const ProjPoint d = meet(join(a, b), join(a_bar, b_bar));
  const ProjPoint d_bar = meet(join(a, b_bar), join(a_bar, b));
  for (const ProjPoint* f : {&a, &a_bar, &b, &b_bar, &d, &d_bar}) {
    if (*f == p) throw GeometryError(ErrorKind::ForbiddenCarrier, p.to_string());
  }
  return {LinePair{join(p, a), join(p, a_bar)}, LinePair{join(p, b), join(p, b_bar)},
          LinePair{join(p, d), join(p, d_bar)}};
}

namespace {

bool same_pair(const LinePair& x, const LinePair& y) {
  return (x.first == y.first && x.second == y.second) ||
         (x.first == y.second && x.second == y.first);
}

std::size_t distinct_count(const std::array<const ProjLine*, 4>& ls) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i; ++j)
      if (*ls[j] == *ls[i]) fresh = false;
    if (fresh) ++n;
  }
  return n;
}

}  // namespace

bool verify_involution(const Involution& inv, std::span<const LinePair> pairs) {
  std::vector<LinePair> all{inv.pair_a(), inv.pair_b()};
  for (const auto& p : pairs) {
    if (!inv.in_pencil(p.first) || !inv.in_pencil(p.second)) {
      throw GeometryError(ErrorKind::NotInPencil, "pair not in the pencil");
    }
    bool seen = false;
    for (const auto& q : all) seen = seen || same_pair(p, q);
    if (!seen) all.push_back(p);
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      for (std::size_t k = j + 1; k < all.size(); ++k) {
        const std::array<const ProjLine*, 6> lines{&all[i].first, &all[i].second, &all[j].first,
                                                   &all[j].second, &all[k].first, &all[k].second};
        // Index 2t and 2t+1 form pair t; the conjugate of index n is n ^ 1.
        for (unsigned mask = 0; mask < 64; ++mask) {
          if (__builtin_popcount(mask) != 4) continue;
          bool covers = true;
          for (unsigned t = 0; t < 3; ++t) covers = covers && (mask & (3u << (2 * t)));
          if (!covers) continue;
          std::array<const ProjLine*, 4> pick{}, image{};
          std::size_t n = 0;
          for (unsigned bit = 0; bit < 6; ++bit) {
            if (mask & (1u << bit)) {
              pick[n] = lines[bit];
              image[n] = lines[bit ^ 1u];
              ++n;
            }
          }
          if (distinct_count(pick) < 3) continue;
          if (distinct_count(image) < 3) return false;
          if (cross_ratio_lines(*pick[0], *pick[1], *pick[2], *pick[3]) !=
              cross_ratio_lines(*image[0], *image[1], *image[2], *image[3])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_complete_quadrilateral_pairing(const PointDuo& pair_a, const PointDuo& pair_b,
                                       const PointDuo& pair_c) {
  const std::array<const ProjPoint*, 6> pts{&pair_a.first, &pair_a.second, &pair_b.first,
                                            &pair_b.second, &pair_c.first, &pair_c.second};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (*pts[i] == *pts[j]) throw GeometryError(ErrorKind::DuplicatePoints, pts[i]->to_string());

  const ProjPoint& a = pair_a.first;
  const ProjPoint& a_bar = pair_a.second;
  for (int swap_b = 0; swap_b < 2; ++swap_b) {
    const ProjPoint& b = swap_b ? pair_b.second : pair_b.first;
    const ProjPoint& b_bar = swap_b ? pair_b.first : pair_b.second;
    for (int swap_c = 0; swap_c < 2; ++swap_c) {
      const ProjPoint& c = swap_c ? pair_c.second : pair_c.first;
      const ProjPoint& c_bar = swap_c ? pair_c.first : pair_c.second;
      if (collinear(a, b, c) && collinear(a, b_bar, c_bar) && collinear(a_bar, b, c_bar) &&
          collinear(a_bar, b_bar, c)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace schroeter
