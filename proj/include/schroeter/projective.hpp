#pragma once

#include <array>
#include <ostream>
#include <string>

#include "schroeter/rational.hpp"

namespace schroeter {

using Vec3 = std::array<Int, 3>;

// Scales v to the primitive integer vector with positive leading nonzero
// entry. Throws TooDegenerate on the zero vector.
void canonicalize(Vec3& v);

Vec3 cross(const Vec3& a, const Vec3& b);
Int dot(const Vec3& a, const Vec3& b);
Int det3(const Vec3& a, const Vec3& b, const Vec3& c);

namespace detail {

// Homogeneous integer triple kept in canonical primitive form, so that two
// representatives of the same projective element compare equal
// component-wise.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(Int x, Int y, Int z) : v_{std::move(x), std::move(y), std::move(z)} {
    canonicalize(v_);
  }
  explicit Homogeneous(Vec3 v) : v_(std::move(v)) { canonicalize(v_); }

  static Homogeneous from_rationals(const Rat& x, const Rat& y, const Rat& z) {
    Int l = lcm(lcm(x.get_den(), y.get_den()), z.get_den());
    return Homogeneous(Int(x.get_num() * (l / x.get_den())), Int(y.get_num() * (l / y.get_den())),
                       Int(z.get_num() * (l / z.get_den())));
  }

  const Int& operator[](std::size_t i) const { return v_[i]; }
  const Vec3& coords() const { return v_; }

  std::string to_string() const {
    return "(" + v_[0].get_str() + ", " + v_[1].get_str() + ", " + v_[2].get_str() + ")";
  }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Homogeneous& a, const Homogeneous& b) { return !(a == b); }
  friend bool operator<(const Homogeneous& a, const Homogeneous& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      int c = cmp(a.v_[i], b.v_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
  friend std::ostream& operator<<(std::ostream& os, const Homogeneous& h) {
    return os << h.to_string();
  }

 private:
  Vec3 v_;
};

struct PointTag {};
struct LineTag {};

}  // namespace detail

using ProjPoint = detail::Homogeneous<detail::PointTag>;
// Coefficients (u, v, w) of the line ux + vy + wz = 0.
using ProjLine = detail::Homogeneous<detail::LineTag>;

ProjPoint affine_point(const Rat& x, const Rat& y);
bool is_affine(const ProjPoint& p);
// Affine coordinates of p; throws NotAffine for points at infinity.
std::array<Rat, 2> affine_coords(const ProjPoint& p);

bool incident(const ProjLine& l, const ProjPoint& p);

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n);

// Value in Q ∪ {∞}.
class CrossRatio {
 public:
  static CrossRatio finite(Rat value) { return CrossRatio(false, std::move(value)); }
  static CrossRatio infinity() { return CrossRatio(true, Rat(0)); }
  // num/den with den == 0 meaning ∞; num and den must not both vanish.
  static CrossRatio from_fraction(const Int& num, const Int& den);

  bool is_infinite() const { return infinite_; }
  const Rat& value() const { return value_; }
  std::string to_string() const;

  friend bool operator==(const CrossRatio& a, const CrossRatio& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const CrossRatio& a, const CrossRatio& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const CrossRatio& c) {
    return os << c.to_string();
  }

 private:
  CrossRatio(bool inf, Rat v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rat value_;
};

// cr(p1,p2;p3,p4) = (t1-t3)(t2-t4) / ((t1-t4)(t2-t3)) in any affine parameter
// t on the common line, with projective limits at ∞.
CrossRatio cross_ratio_points(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                              const ProjPoint& p4);
// Computed through the intersections with an automatically chosen transversal.
CrossRatio cross_ratio_lines(const ProjLine& a, const ProjLine& b, const ProjLine& c,
                             const ProjLine& d);
CrossRatio cross_ratio_lines(const ProjLine& a, const ProjLine& b, const ProjLine& c,
                             const ProjLine& d, const ProjLine& transversal);

using Matrix3 = std::array<std::array<Rat, 3>, 3>;

Matrix3 identity_matrix();
Rat determinant(const Matrix3& m);
Matrix3 multiply(const Matrix3& a, const Matrix3& b);
Matrix3 inverse(const Matrix3& m);

ProjPoint apply_homography(const Matrix3& m, const ProjPoint& p);
// Image of a line under the point map p -> m p, i.e. l -> m^{-T} l.
ProjLine apply_homography(const Matrix3& m, const ProjLine& l);

// The homography sending p1, p2, p3, p4 to (0,0,1), (0,1,0), (1,0,0), (1,1,1).
Matrix3 frame_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                  const ProjPoint& p4);

}  // namespace schroeter
