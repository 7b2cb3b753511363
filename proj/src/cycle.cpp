#include "quadline/cycle.hpp"

#include <algorithm>

#include "quadline/errors.hpp"
#include "split.hpp"

namespace quadline {

Cycle::Cycle(Scalar a_, Scalar b_, Scalar c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_))
{
  if (!(a.field() == b.field()))
    throw FieldMismatch(a.field().to_string(), b.field().to_string());
  if (!(a.field() == c.field()))
    throw FieldMismatch(a.field().to_string(), c.field().to_string());
}

Cycle Cycle::from_ints(const FieldSpec& field, long a, long b, long c)
{
  return {Scalar::from_int(field, a), Scalar::from_int(field, b),
          Scalar::from_int(field, c)};
}

int Cycle::degree() const
{
  if (!a.is_zero())
    return 2;
  if (!b.is_zero())
    return 1;
  if (!c.is_zero())
    return 0;
  throw NotACycle();
}

std::string Cycle::to_string() const
{
  return a.to_string() + "," + b.to_string() + "," + c.to_string();
}

ProjPoint ProjPoint::finite(const Scalar& value)
{
  return ProjPoint(value, Scalar::one(value.field()));
}

ProjPoint ProjPoint::infinity(const FieldSpec& field)
{
  return ProjPoint(Scalar::one(field), Scalar::zero(field));
}

ProjPoint ProjPoint::homogeneous(const Scalar& x, const Scalar& y)
{
  if (!(x.field() == y.field()))
    throw FieldMismatch(x.field().to_string(), y.field().to_string());
  if (!y.is_zero())
    return finite(x / y);
  if (x.is_zero())
    throw DomainError("(0, 0) is not a point of the projective line");
  return infinity(x.field());
}

const Scalar& ProjPoint::value() const
{
  if (is_infinity())
    throw DomainError("the point at infinity has no affine coordinate");
  return x_;
}

std::string ProjPoint::to_string() const
{
  return is_infinity() ? "inf" : x_.to_string();
}

bool operator<(const ProjPoint& lhs, const ProjPoint& rhs)
{
  if (lhs.is_infinity() || rhs.is_infinity())
    return !lhs.is_infinity() && rhs.is_infinity();
  return canonical_less(lhs.x_, rhs.x_);
}

Scalar pair(const Cycle& p, const Cycle& q)
{
  const auto two = Scalar::from_int(p.field(), 2);
  return p.b * q.b - two * (p.a * q.c + q.a * p.c);
}

Scalar norm(const Cycle& p)
{
  return pair(p, p);
}

bool is_isotropic(const Cycle& p)
{
  if (p.is_zero())
    throw NotACycle();
  return norm(p).is_zero();
}

Cycle point_to_cycle(const ProjPoint& point)
{
  const auto field = point.field();
  if (point.is_infinity())
    return Cycle::from_ints(field, 0, 0, 1);
  const auto& u = point.value();
  return {Scalar::one(field), Scalar::from_int(field, -2) * u, u * u};
}

ProjPoint cycle_to_point(const Cycle& p)
{
  if (!is_isotropic(p))
    throw DomainError("cycle " + p.to_string() + " is not isotropic");
  if (p.a.is_zero())
    return ProjPoint::infinity(p.field());
  return ProjPoint::finite(-p.b / (Scalar::from_int(p.field(), 2) * p.a));
}

std::vector<ProjPoint> zero_points(const Cycle& p)
{
  const auto field = p.field();
  std::vector<ProjPoint> points;
  switch (p.degree())
  {
    case 0:
      points.push_back(ProjPoint::infinity(field));
      break;
    case 1:
      points.push_back(ProjPoint::finite(-p.c / p.b));
      points.push_back(ProjPoint::infinity(field));
      break;
    default:
    {
      const auto root = norm(p).sqrt();
      if (!root)
        break;
      const auto two_a = Scalar::from_int(field, 2) * p.a;
      points.push_back(ProjPoint::finite((-p.b + *root) / two_a));
      if (!root->is_zero())
        points.push_back(ProjPoint::finite((-p.b - *root) / two_a));
      break;
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

bool orthogonal(const Cycle& p, const Cycle& q)
{
  if (p.is_zero() || q.is_zero())
    throw NotACycle();
  return pair(p, q).is_zero();
}

Cycle canonical_multiple(const Cycle& p)
{
  for (const auto* coeff : {&p.a, &p.b, &p.c})
    if (!coeff->is_zero())
      return coeff->inverse() * p;
  throw NotACycle();
}

bool proportional(const Cycle& p, const Cycle& q)
{
  return canonical_multiple(p) == canonical_multiple(q);
}

Cycle parse_cycle(const FieldSpec& field, std::string_view text)
{
  const auto parts = detail::split(text, ',');
  if (parts.size() != 3)
    throw ParseError("malformed cycle '" + std::string(text) +
                     "' (expected a,b,c)");
  return {parse_scalar(field, parts[0]), parse_scalar(field, parts[1]),
          parse_scalar(field, parts[2])};
}

ProjPoint parse_point(const FieldSpec& field, std::string_view text)
{
  if (text == "inf")
    return ProjPoint::infinity(field);
  return ProjPoint::finite(parse_scalar(field, text));
}

}  // namespace quadline
