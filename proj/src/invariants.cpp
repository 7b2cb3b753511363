#include "quadline/invariants.hpp"

#include "quadline/errors.hpp"

namespace quadline {

namespace {

void require_distinct(const ProjPoint& x, const ProjPoint& y,
                      const ProjPoint& z, const ProjPoint& t)
{
  if (x == y || x == z || x == t || y == z || y == t || z == t)
    throw DegenerateError("cross ratio of " + x.to_string() + ", " +
                          y.to_string() + ", " + z.to_string() + ", " +
                          t.to_string() + ": points are not pairwise distinct");
}

Scalar det2(const ProjPoint& p, const ProjPoint& q)
{
  return p.x() * q.y() - p.y() * q.x();
}

}  // namespace

Scalar classical_cross_ratio(const ProjPoint& x, const ProjPoint& y,
                             const ProjPoint& z, const ProjPoint& t)
{
  require_distinct(x, y, z, t);
  return (det2(x, z) * det2(y, t)) / (det2(x, t) * det2(y, z));
}

Scalar quadric_cross_ratio(const ProjPoint& x, const ProjPoint& y,
                           const ProjPoint& z, const ProjPoint& t)
{
  require_distinct(x, y, z, t);
  const auto cx = point_to_cycle(x);
  const auto cy = point_to_cycle(y);
  const auto cz = point_to_cycle(z);
  const auto ct = point_to_cycle(t);
  return (pair(cx, cz) * pair(cy, ct)) / (pair(cx, ct) * pair(cy, cz));
}

Scalar stabilizer_invariant(const ProjPoint& x, const ProjPoint& y,
                            const Cycle& p)
{
  if (x == y)
    throw DegenerateError("stabilizer invariant needs two distinct points");
  if (is_isotropic(p))
    throw DomainError("cycle " + p.to_string() + " is isotropic");
  const auto cx = point_to_cycle(x);
  const auto cy = point_to_cycle(y);
  return pair(cx, p) * pair(cy, p) / pair(cx, cy);
}

}  // namespace quadline
