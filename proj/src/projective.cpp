#include "schroeter/projective.hpp"

#include <algorithm>
#include <vector>

#include "schroeter/error.hpp"

namespace schroeter {

void canonicalize(Vec3& v) {
  // Start from the two shortest entries: the running gcd is usually tiny by
  // the time the longest one is reached.
  std::array<const Int*, 3> by_size{&v[0], &v[1], &v[2]};
  std::sort(by_size.begin(), by_size.end(), [](const Int* a, const Int* b) {
    return mpz_size(a->get_mpz_t()) < mpz_size(b->get_mpz_t());
  });
  Int g = gcd(*by_size[0], *by_size[1]);
  if (g != 1) g = gcd(g, *by_size[2]);
  if (g == 0) throw GeometryError(ErrorKind::TooDegenerate, "zero homogeneous vector");
  if (g != 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  for (const auto& c : v) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& d : v) d = -d;
    }
    break;
  }
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Int det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

ProjPoint affine_point(const Rat& x, const Rat& y) {
  return ProjPoint::from_rationals(x, y, Rat(1));
}

bool is_affine(const ProjPoint& p) { return p[2] != 0; }

std::array<Rat, 2> affine_coords(const ProjPoint& p) {
  if (!is_affine(p)) throw GeometryError(ErrorKind::NotAffine, p.to_string());
  return {make_rat(p[0], p[2]), make_rat(p[1], p[2])};
}

bool incident(const ProjLine& l, const ProjPoint& p) { return dot(l.coords(), p.coords()) == 0; }

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw GeometryError(ErrorKind::IdenticalPoints, p.to_string());
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw GeometryError(ErrorKind::IdenticalLines, l.to_string());
  return ProjPoint(cross(l.coords(), m.coords()));
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return det3(p.coords(), q.coords(), r.coords()) == 0;
}

bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  return det3(l.coords(), m.coords(), n.coords()) == 0;
}

CrossRatio CrossRatio::from_fraction(const Int& num, const Int& den) {
  if (den == 0) {
    if (num == 0) throw GeometryError(ErrorKind::TooDegenerate, "cross-ratio 0/0");
    return infinity();
  }
  return finite(make_rat(num, den));
}

std::string CrossRatio::to_string() const {
  return infinite_ ? std::string("inf") : schroeter::to_string(value_);
}

namespace {

// Homogeneous parameters of four points on the line spanned by two of them.
// The bracket [ij] = l_i m_j - l_j m_i is proportional to t_i - t_j.
CrossRatio cross_ratio_of_vectors(const std::array<Vec3, 4>& pts) {
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < 4; ++i) {
    Vec3 ci = pts[i];
    bool seen = false;
    for (std::size_t j : distinct) {
      Vec3 c = cross(pts[j], ci);
      if (c[0] == 0 && c[1] == 0 && c[2] == 0) seen = true;
    }
    if (!seen) distinct.push_back(i);
  }
  if (distinct.size() < 3) {
    throw GeometryError(ErrorKind::TooDegenerate, "fewer than three distinct elements");
  }
  const Vec3& u = pts[distinct[0]];
  const Vec3& v = pts[distinct[1]];
  for (const auto& p : pts) {
    if (det3(u, v, p) != 0) throw GeometryError(ErrorKind::NotCollinear);
  }

  Vec3 uv = cross(u, v);
  std::size_t j = 0, k = 0;
  if (uv[2] != 0) {
    j = 0, k = 1;
  } else if (uv[1] != 0) {
    j = 2, k = 0;
  } else {
    j = 1, k = 2;
  }
  std::array<Int, 4> lam, mu;
  for (std::size_t i = 0; i < 4; ++i) {
    lam[i] = pts[i][j] * v[k] - pts[i][k] * v[j];
    mu[i] = u[j] * pts[i][k] - u[k] * pts[i][j];
  }
  auto bracket = [&](std::size_t a, std::size_t b) -> Int {
    return lam[a] * mu[b] - lam[b] * mu[a];
  };
  return CrossRatio::from_fraction(bracket(0, 2) * bracket(1, 3), bracket(0, 3) * bracket(1, 2));
}

}  // namespace

CrossRatio cross_ratio_points(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                              const ProjPoint& p4) {
  return cross_ratio_of_vectors({p1.coords(), p2.coords(), p3.coords(), p4.coords()});
}

namespace {

ProjPoint pencil_carrier(const std::array<const ProjLine*, 4>& lines) {
  std::size_t second = 1;
  while (second < 4 && *lines[second] == *lines[0]) ++second;
  if (second == 4) throw GeometryError(ErrorKind::TooDegenerate, "all four lines coincide");
  ProjPoint carrier = meet(*lines[0], *lines[second]);
  for (const auto* l : lines) {
    if (!incident(*l, carrier)) throw GeometryError(ErrorKind::NotConcurrent);
  }
  return carrier;
}

}  // namespace

CrossRatio cross_ratio_lines(const ProjLine& a, const ProjLine& b, const ProjLine& c,
                             const ProjLine& d, const ProjLine& transversal) {
  ProjPoint carrier = pencil_carrier({&a, &b, &c, &d});
  if (incident(transversal, carrier)) {
    throw GeometryError(ErrorKind::TooDegenerate, "transversal passes through the carrier");
  }
  return cross_ratio_points(meet(a, transversal), meet(b, transversal), meet(c, transversal),
                            meet(d, transversal));
}

CrossRatio cross_ratio_lines(const ProjLine& a, const ProjLine& b, const ProjLine& c,
                             const ProjLine& d) {
  ProjPoint carrier = pencil_carrier({&a, &b, &c, &d});
  for (const ProjLine& t : {ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1)}) {
    if (!incident(t, carrier)) return cross_ratio_lines(a, b, c, d, t);
  }
  // Unreachable: no point lies on all three coordinate lines.
  throw GeometryError(ErrorKind::TooDegenerate, "no transversal");
}

Matrix3 identity_matrix() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

Rat determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  }
  return r;
}

Matrix3 inverse(const Matrix3& m) {
  Rat d = determinant(m);
  if (d == 0) throw GeometryError(ErrorKind::SingularMatrix);
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // cofactor of m[j][i]
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / d;
    }
  }
  return r;
}

namespace {

std::array<Rat, 3> mat_vec(const Matrix3& m, const Vec3& v) {
  std::array<Rat, 3> r;
  for (std::size_t i = 0; i < 3; ++i) {
    r[i] = m[i][0] * Rat(v[0]) + m[i][1] * Rat(v[1]) + m[i][2] * Rat(v[2]);
  }
  return r;
}

}  // namespace

ProjPoint apply_homography(const Matrix3& m, const ProjPoint& p) {
  if (determinant(m) == 0) throw GeometryError(ErrorKind::SingularMatrix);
  auto r = mat_vec(m, p.coords());
  return ProjPoint::from_rationals(r[0], r[1], r[2]);
}

ProjLine apply_homography(const Matrix3& m, const ProjLine& l) {
  Matrix3 inv = inverse(m);
  Matrix3 inv_t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) inv_t[i][j] = inv[j][i];
  auto r = mat_vec(inv_t, l.coords());
  return ProjLine::from_rationals(r[0], r[1], r[2]);
}

Matrix3 frame_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                  const ProjPoint& p4) {
  const std::array<const ProjPoint*, 4> pts{&p1, &p2, &p3, &p4};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (std::size_t k = j + 1; k < 4; ++k) {
        if (collinear(*pts[i], *pts[j], *pts[k])) {
          throw GeometryError(ErrorKind::DegenerateFrame,
                              "three collinear frame points: " + pts[i]->to_string() + ", " +
                                  pts[j]->to_string() + ", " + pts[k]->to_string());
        }
      }
    }
  }
  // Columns e1 -> p3, e2 -> p2, e3 -> p1, scaled so that (1,1,1) -> p4.
  Matrix3 basis;
  for (std::size_t i = 0; i < 3; ++i) {
    basis[i][0] = Rat(p3[i]);
    basis[i][1] = Rat(p2[i]);
    basis[i][2] = Rat(p1[i]);
  }
  auto scale = mat_vec(inverse(basis), p4.coords());
  Matrix3 to_points;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) to_points[i][j] = basis[i][j] * scale[j];
  return inverse(to_points);
}

}  // namespace schroeter
