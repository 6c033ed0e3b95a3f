#include "schroeter/cubic.hpp"

#include <optional>
#include <vector>

#include "schroeter/error.hpp"

namespace schroeter {

namespace {

Int power(const Int& base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_on_curve(const Cubic& curve, const ProjPoint& p) {
  if (!curve.contains(p)) throw GeometryError(ErrorKind::NotOnCurve, p.to_string());
}

Vec3 combine(const Int& s, const Vec3& p, const Int& t, const Vec3& q) {
  return {s * p[0] + t * q[0], s * p[1] + t * q[1], s * p[2] + t * q[2]};
}

}  // namespace

const std::array<std::array<int, 3>, Cubic::kTerms>& cubic_monomials() {
  static const std::array<std::array<int, 3>, Cubic::kTerms> kMonomials{{{3, 0, 0},
                                                                         {2, 1, 0},
                                                                         {2, 0, 1},
                                                                         {1, 2, 0},
                                                                         {1, 1, 1},
                                                                         {1, 0, 2},
                                                                         {0, 3, 0},
                                                                         {0, 2, 1},
                                                                         {0, 1, 2},
                                                                         {0, 0, 3}}};
  return kMonomials;
}

Cubic::Cubic(Coeffs coeffs) : c_(std::move(coeffs)) {
  Int g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  if (g == 0) throw GeometryError(ErrorKind::TooDegenerate, "zero cubic form");
  for (auto& c : c_) c /= g;
  for (const auto& c : c_) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& d : c_) d = -d;
    }
    break;
  }
}

Cubic Cubic::from_rationals(const std::array<Rat, kTerms>& coeffs) {
  Int l = 1;
  for (const auto& c : coeffs) l = lcm(l, c.get_den());
  Coeffs ints;
  for (std::size_t i = 0; i < kTerms; ++i) {
    ints[i] = coeffs[i].get_num() * (l / coeffs[i].get_den());
  }
  return Cubic(std::move(ints));
}

Int Cubic::eval(const Vec3& p) const {
  const auto& mons = cubic_monomials();
  Int sum = 0;
  for (std::size_t i = 0; i < kTerms; ++i) {
    if (c_[i] == 0) continue;
    sum += c_[i] * power(p[0], mons[i][0]) * power(p[1], mons[i][1]) * power(p[2], mons[i][2]);
  }
  return sum;
}

Vec3 Cubic::gradient(const Vec3& p) const {
  const auto& mons = cubic_monomials();
  Vec3 g{0, 0, 0};
  for (std::size_t i = 0; i < kTerms; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t v = 0; v < 3; ++v) {
      int e = mons[i][v];
      if (e == 0) continue;
      Int term = c_[i] * e;
      for (std::size_t w = 0; w < 3; ++w) term *= power(p[w], w == v ? e - 1 : mons[i][w]);
      g[v] += term;
    }
  }
  return g;
}

std::string Cubic::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < kTerms; ++i) {
    if (i) s += ' ';
    s += c_[i].get_str();
  }
  return s;
}

Cubic fit_cubic(std::span<const ProjPoint> points) {
  const auto& mons = cubic_monomials();
  const std::size_t rows = points.size();
  constexpr std::size_t cols = Cubic::kTerms;
  std::vector<std::array<Int, cols>> m(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m[r][c] = power(points[r][0], mons[c][0]) * power(points[r][1], mons[c][1]) *
                power(points[r][2], mons[c][2]);
    }
  }

  // Bareiss fraction-free elimination to row echelon form.
  std::vector<std::size_t> pivots;
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    pivots.push_back(col);
    ++rank;
  }

  if (rank < cols - 1) {
    throw GeometryError(ErrorKind::AmbiguousFit,
                        "points impose only " + std::to_string(rank) + " conditions");
  }
  if (rank == cols) throw GeometryError(ErrorKind::OverconstrainedFit);

  std::size_t free_col = 0;
  for (std::size_t c = 0, k = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      free_col = c;
      break;
    }
  }
  std::array<Rat, cols> x;
  for (auto& v : x) v = 0;
  x[free_col] = 1;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t pc = pivots[k];
    Rat s = 0;
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (m[k][j] != 0) s += Rat(m[k][j]) * x[j];
    }
    x[pc] = -s / Rat(m[k][pc]);
  }
  return Cubic::from_rationals(x);
}

Cubic fit_cubic_9(std::span<const ProjPoint> points) {
  if (points.size() != 9) {
    throw GeometryError(ErrorKind::TooDegenerate,
                        "expected 9 points, got " + std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j)
      if (points[i] == points[j]) {
        throw GeometryError(ErrorKind::DuplicatePoints, points[i].to_string());
      }
  return fit_cubic(points);
}

ProjLine tangent_at(const Cubic& curve, const ProjPoint& p) {
  require_on_curve(curve, p);
  Vec3 g = curve.gradient(p.coords());
  if (g[0] == 0 && g[1] == 0 && g[2] == 0) throw GeometryError(ErrorKind::SingularPoint, p.to_string());
  return ProjLine(g);
}

ProjPoint third_intersection(const Cubic& curve, const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw GeometryError(ErrorKind::IdenticalPoints, p.to_string());
  require_on_curve(curve, p);
  require_on_curve(curve, q);
  // F(sP + tQ) = s²t ∇F(P)·Q + st² ∇F(Q)·P once F(P) = F(Q) = 0.
  Int c2 = dot(curve.gradient(p.coords()), q.coords());
  Int c1 = dot(curve.gradient(q.coords()), p.coords());
  if (c1 == 0 && c2 == 0) {
    throw GeometryError(ErrorKind::LineComponent, join(p, q).to_string() + " lies on the curve");
  }
  return ProjPoint(combine(c1, p.coords(), -c2, q.coords()));
}

ProjPoint tangent_third(const Cubic& curve, const ProjPoint& p) {
  ProjLine tangent = tangent_at(curve, p);
  std::optional<ProjPoint> other;
  for (const ProjLine& axis : {ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1)}) {
    if (axis == tangent) continue;
    ProjPoint q = meet(tangent, axis);
    if (q != p) {
      other = q;
      break;
    }
  }
  // Two of the three axes always qualify.
  const ProjPoint& q = *other;
  // F(sP + tQ) = t² (s ∇F(Q)·P + t F(Q)): the double root at P is divided out.
  Int c0 = curve.eval(q);
  Int c1 = dot(curve.gradient(q.coords()), p.coords());
  if (c0 == 0 && c1 == 0) {
    throw GeometryError(ErrorKind::LineComponent, "tangent " + tangent.to_string() + " lies on the curve");
  }
  return ProjPoint(combine(c0, p.coords(), -c1, q.coords()));
}

ProjPoint sharp(const Cubic& curve, const ProjPoint& p, const ProjPoint& q) {
  return p == q ? tangent_third(curve, p) : third_intersection(curve, p, q);
}

Cubic explicit_schroeter_cubic(const ProjPoint& c, const ProjPoint& c_bar) {
  if (!is_affine(c) || !is_affine(c_bar)) {
    throw GeometryError(ErrorKind::NotAffine, "C and C̄ must be affine");
  }
  auto [cx, cy] = affine_coords(c);
  auto [dx, dy] = affine_coords(c_bar);
  std::array<Rat, Cubic::kTerms> k;
  k[0] = 0;                             // x³
  k[1] = -1;                            // x²y
  k[2] = cy * dy;                       // x²z
  k[3] = 1;                             // xy²
  k[4] = cx + dx - cy * dx - cx * dy;   // xyz
  k[5] = -cy * dy;                      // xz²
  k[6] = 0;                             // y³
  k[7] = cx * dx - cx - dx;             // y²z
  k[8] = cy * dx + cx * dy - cx * dx;   // yz²
  k[9] = 0;                             // z³
  return Cubic::from_rationals(k);
}

}  // namespace schroeter
