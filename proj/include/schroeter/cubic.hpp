#pragma once

#include <array>
#include <span>
#include <string>

#include "schroeter/projective.hpp"

namespace schroeter {

// Ternary cubic form. Coefficients are stored in the fixed monomial order
//   x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³
// as a primitive integer vector with positive leading nonzero entry.
class Cubic {
 public:
  static constexpr std::size_t kTerms = 10;
  using Coeffs = std::array<Int, kTerms>;

  explicit Cubic(Coeffs coeffs);
  static Cubic from_rationals(const std::array<Rat, kTerms>& coeffs);

  const Coeffs& coeffs() const { return c_; }

  Int eval(const Vec3& p) const;
  Int eval(const ProjPoint& p) const { return eval(p.coords()); }
  bool contains(const ProjPoint& p) const { return eval(p) == 0; }
  Vec3 gradient(const Vec3& p) const;

  // Coefficients separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const Cubic& a, const Cubic& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cubic& a, const Cubic& b) { return !(a == b); }

 private:
  Coeffs c_;
};

// Exponents (of x, y, z) of the i-th monomial.
const std::array<std::array<int, 3>, Cubic::kTerms>& cubic_monomials();

inline Int eval(const Cubic& curve, const ProjPoint& p) { return curve.eval(p); }

// Primitive generator of the nullspace of the 9×10 incidence matrix.
// AmbiguousFit if the points impose fewer than nine conditions.
Cubic fit_cubic_9(std::span<const ProjPoint> points);

// Same for any number of points; OverconstrainedFit when no cubic passes
// through all of them.
Cubic fit_cubic(std::span<const ProjPoint> points);

ProjLine tangent_at(const Cubic& curve, const ProjPoint& p);

// P # Q: third intersection of the chord PQ, counted with multiplicity.
ProjPoint third_intersection(const Cubic& curve, const ProjPoint& p, const ProjPoint& q);

// P # P: residual intersection of the tangent at P.
ProjPoint tangent_third(const Cubic& curve, const ProjPoint& p);

// P # Q for arbitrary P, Q on the curve (tangent path when they coincide).
ProjPoint sharp(const Cubic& curve, const ProjPoint& p, const ProjPoint& q);

// Closed form of the curve carried by the seed A=(0,0,1), Ā=(0,1,0),
// B=(1,0,0), B̄=(1,1,1), C, C̄ with C and C̄ affine.
Cubic explicit_schroeter_cubic(const ProjPoint& c, const ProjPoint& c_bar);

}  // namespace schroeter
