#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadline/scalar.hpp"

namespace quadline {

// A vector aX^2 + bX + c of the 3-dimensional space E, read as the binary
// quadratic form aX^2 + bXY + cY^2. Cycles are genuine vectors: no scalar
// normalization is applied. The zero triple is representable (it is the zero
// vector of E) but operations that need a cycle reject it with NotACycle.
struct Cycle
{
  Scalar a;
  Scalar b;
  Scalar c;

  Cycle() = default;
  // Throws FieldMismatch unless all three coefficients share a field.
  Cycle(Scalar a, Scalar b, Scalar c);

  static Cycle from_ints(const FieldSpec& field, long a, long b, long c);
  static Cycle zero(const FieldSpec& field) { return from_ints(field, 0, 0, 0); }

  FieldSpec field() const { return a.field(); }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

  // 2, 1 or 0 for 2-, 1- and 0-cycles; throws NotACycle for the zero triple.
  int degree() const;

  std::string to_string() const;

  Cycle operator-() const { return {-a, -b, -c}; }
  friend Cycle operator+(const Cycle& p, const Cycle& q)
  {
    return {p.a + q.a, p.b + q.b, p.c + q.c};
  }
  friend Cycle operator-(const Cycle& p, const Cycle& q)
  {
    return {p.a - q.a, p.b - q.b, p.c - q.c};
  }
  friend Cycle operator*(const Scalar& s, const Cycle& p)
  {
    return {s * p.a, s * p.b, s * p.c};
  }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Point of the projective line K ∪ {∞}, stored in canonical homogeneous form:
// (x, 1) for finite points and (1, 0) for ∞.
class ProjPoint
{
public:
  static ProjPoint finite(const Scalar& value);
  static ProjPoint infinity(const FieldSpec& field);
  // Throws DomainError when both coordinates vanish.
  static ProjPoint homogeneous(const Scalar& x, const Scalar& y);

  bool is_infinity() const { return y_.is_zero(); }
  // Affine coordinate; throws DomainError at ∞.
  const Scalar& value() const;
  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  FieldSpec field() const { return x_.field(); }

  // Scalar literal or "inf".
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  // Finite points in canonical scalar order, then ∞.
  friend bool operator<(const ProjPoint& lhs, const ProjPoint& rhs);

private:
  ProjPoint(Scalar x, Scalar y) : x_(std::move(x)), y_(std::move(y)) {}

  Scalar x_;
  Scalar y_;
};

// Cycle pairing <p, q> = b b* - 2 a c* - 2 a* c.
Scalar pair(const Cycle& p, const Cycle& q);

// <p, p>, i.e. the discriminant b^2 - 4ac.
Scalar norm(const Cycle& p);

// Throws NotACycle for the zero triple.
bool is_isotropic(const Cycle& p);

// Canonical isotropic representative: u -> (1, -2u, u^2), ∞ -> (0, 0, 1).
Cycle point_to_cycle(const ProjPoint& point);

// Inverse of point_to_cycle up to scalar multiples. Throws DomainError for a
// nonisotropic cycle and NotACycle for the zero triple.
ProjPoint cycle_to_point(const Cycle& p);

// Points of the line where p vanishes as a binary quadratic form, sorted.
// Size 1 exactly when p is isotropic. Roots outside K are not reported.
std::vector<ProjPoint> zero_points(const Cycle& p);

// <p, q> == 0. Throws NotACycle if either argument is the zero triple.
bool orthogonal(const Cycle& p, const Cycle& q);

// Rescales p so that its first nonzero coefficient is 1.
Cycle canonical_multiple(const Cycle& p);

// True when p and q span the same line of E (both must be nonzero).
bool proportional(const Cycle& p, const Cycle& q);

// `a,b,c`.
Cycle parse_cycle(const FieldSpec& field, std::string_view text);
// Scalar literal or `inf`.
ProjPoint parse_point(const FieldSpec& field, std::string_view text);

}  // namespace quadline
