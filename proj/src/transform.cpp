#include "quadline/transform.hpp"

#include <algorithm>

#include "quadline/errors.hpp"
#include "split.hpp"

namespace quadline {

namespace {

using Vec3 = std::array<Scalar, 3>;

Vec3 coords(const Cycle& p)
{
  return {p.a, p.b, p.c};
}

Cycle from_coords(const Vec3& v)
{
  return {v[0], v[1], v[2]};
}

template <std::size_t N>
void require_one_field(const std::array<Scalar, N>& entries)
{
  const auto field = entries[0].field();
  for (const auto& e : entries)
    if (!(e.field() == field))
      throw FieldMismatch(field.to_string(), e.field().to_string());
}

template <std::size_t N>
bool lex_less(const std::array<Scalar, N>& lhs, const std::array<Scalar, N>& rhs)
{
  for (std::size_t i = 0; i < N; ++i)
  {
    if (canonical_less(lhs[i], rhs[i]))
      return true;
    if (canonical_less(rhs[i], lhs[i]))
      return false;
  }
  return false;
}

OrthMap transpose(const OrthMap& t)
{
  OrthMap::Entries e;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      e[3 * r + c] = t(c, r);
  return OrthMap(e);
}

// Basis of the kernel of a 3x3 matrix, by row reduction.
std::vector<Vec3> kernel(const OrthMap& m)
{
  std::array<Vec3, 3> rows;
  for (int r = 0; r < 3; ++r)
    rows[r] = {m(r, 0), m(r, 1), m(r, 2)};

  std::array<int, 3> pivot_col{-1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col)
  {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (!rows[r][col].is_zero())
      {
        pivot = r;
        break;
      }
    if (pivot < 0)
      continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = rows[rank][col].inverse();
    for (auto& x : rows[rank])
      x *= inv;
    for (int r = 0; r < 3; ++r)
    {
      if (r == rank || rows[r][col].is_zero())
        continue;
      const auto f = rows[r][col];
      for (int c = 0; c < 3; ++c)
        rows[r][c] -= f * rows[rank][c];
    }
    pivot_col[rank++] = col;
  }

  const auto field = m.field();
  std::vector<Vec3> basis;
  for (int free = 0; free < 3; ++free)
  {
    if (std::find(pivot_col.begin(), pivot_col.begin() + rank, free) !=
        pivot_col.begin() + rank)
      continue;
    Vec3 v{Scalar::zero(field), Scalar::zero(field), Scalar::zero(field)};
    v[free] = Scalar::one(field);
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = -rows[r][free];
    basis.push_back(v);
  }
  return basis;
}

Scalar det2(const ProjPoint& p, const ProjPoint& q)
{
  return p.x() * q.y() - p.y() * q.x();
}

// If S is a reflection, returns its defining cycle.
std::optional<Cycle> as_reflection(const OrthMap& s)
{
  const auto field = s.field();
  const auto id = OrthMap::identity(field);
  if (!(s * s == id) || s.is_identity())
    return std::nullopt;
  OrthMap::Entries shifted = s.entries();
  for (int i = 0; i < 3; ++i)
    shifted[4 * i] += Scalar::one(field);
  const auto minus_space = kernel(OrthMap(shifted));
  if (minus_space.size() != 1)
    return std::nullopt;
  const auto q = from_coords(minus_space.front());
  if (is_isotropic(q) || !(reflection(q) == s))
    return std::nullopt;
  return q;
}

// Basis cycles X^2, X, 1 followed by the frame u, v, w, t.
std::vector<Cycle> fixed_candidates(const FieldSpec& field)
{
  return {Cycle::from_ints(field, 1, 0, 0), Cycle::from_ints(field, 0, 1, 0),
          Cycle::from_ints(field, 0, 0, 1), Cycle::from_ints(field, 1, 0, 0),
          Cycle::from_ints(field, 1, -2, 1), Cycle::from_ints(field, 0, 0, 1),
          Cycle::from_ints(field, 1, -4, 4)};
}

}  // namespace

OrthMap::OrthMap(Entries entries) : m_(std::move(entries))
{
  require_one_field(m_);
}

OrthMap OrthMap::identity(const FieldSpec& field)
{
  return from_ints(field, {1, 0, 0, 0, 1, 0, 0, 0, 1});
}

OrthMap OrthMap::from_ints(const FieldSpec& field, const std::array<long, 9>& e)
{
  Entries entries;
  for (std::size_t i = 0; i < 9; ++i)
    entries[i] = Scalar::from_int(field, e[i]);
  return OrthMap(entries);
}

Scalar OrthMap::determinant() const
{
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool OrthMap::is_identity() const
{
  return *this == identity(field());
}

std::string OrthMap::to_string() const
{
  std::string out;
  for (int r = 0; r < 3; ++r)
  {
    if (r > 0)
      out += ';';
    for (int c = 0; c < 3; ++c)
    {
      if (c > 0)
        out += ',';
      out += (*this)(r, c).to_string();
    }
  }
  return out;
}

OrthMap OrthMap::operator-() const
{
  Entries e;
  for (std::size_t i = 0; i < 9; ++i)
    e[i] = -m_[i];
  return OrthMap(e);
}

OrthMap operator*(const OrthMap& s, const OrthMap& t)
{
  OrthMap::Entries e;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      e[3 * r + c] = s(r, 0) * t(0, c) + s(r, 1) * t(1, c) + s(r, 2) * t(2, c);
  return OrthMap(e);
}

bool operator<(const OrthMap& lhs, const OrthMap& rhs)
{
  return lex_less(lhs.m_, rhs.m_);
}

MobiusMap::MobiusMap(const Entries& entries) : n_(entries)
{
  require_one_field(n_);
  if ((n_[0] * n_[3] - n_[1] * n_[2]).is_zero())
    throw DomainError("singular matrix " + to_string());
  const auto lead = std::find_if(n_.begin(), n_.end(),
                                 [](const Scalar& s) { return !s.is_zero(); });
  const auto inv = lead->inverse();
  for (auto& x : n_)
    x *= inv;
}

MobiusMap MobiusMap::identity(const FieldSpec& field)
{
  return from_ints(field, {1, 0, 0, 1});
}

MobiusMap MobiusMap::from_ints(const FieldSpec& field, const std::array<long, 4>& e)
{
  return MobiusMap({Scalar::from_int(field, e[0]), Scalar::from_int(field, e[1]),
                    Scalar::from_int(field, e[2]), Scalar::from_int(field, e[3])});
}

bool MobiusMap::is_identity() const
{
  return *this == identity(field());
}

bool MobiusMap::is_involution() const
{
  return (n_[0] + n_[3]).is_zero();
}

MobiusMap MobiusMap::inverse() const
{
  return MobiusMap({n_[3], -n_[1], -n_[2], n_[0]});
}

std::string MobiusMap::to_string() const
{
  return n_[0].to_string() + "," + n_[1].to_string() + ";" + n_[2].to_string() +
         "," + n_[3].to_string();
}

MobiusMap operator*(const MobiusMap& m, const MobiusMap& n)
{
  return MobiusMap({m(0, 0) * n(0, 0) + m(0, 1) * n(1, 0),
                    m(0, 0) * n(0, 1) + m(0, 1) * n(1, 1),
                    m(1, 0) * n(0, 0) + m(1, 1) * n(1, 0),
                    m(1, 0) * n(0, 1) + m(1, 1) * n(1, 1)});
}

bool operator<(const MobiusMap& lhs, const MobiusMap& rhs)
{
  return lex_less(lhs.n_, rhs.n_);
}

OrthMap gram_matrix(const FieldSpec& field)
{
  return OrthMap::from_ints(field, {0, 0, -2, 0, 1, 0, -2, 0, 0});
}

bool is_orthogonal(const OrthMap& t)
{
  const auto g = gram_matrix(t.field());
  return transpose(t) * g * t == g;
}

bool is_special(const OrthMap& t)
{
  return t.determinant().is_one();
}

OrthMap reflection(const Cycle& p)
{
  if (is_isotropic(p))
    throw DomainError("cycle " + p.to_string() +
                      " is isotropic and defines no reflection");
  const auto field = p.field();
  const auto scale = Scalar::from_int(field, 2) / norm(p);
  const std::array<Cycle, 3> basis{Cycle::from_ints(field, 1, 0, 0),
                                   Cycle::from_ints(field, 0, 1, 0),
                                   Cycle::from_ints(field, 0, 0, 1)};
  OrthMap::Entries e;
  for (int col = 0; col < 3; ++col)
  {
    const auto s = scale * pair(basis[col], p);
    const auto image = coords(basis[col] - s * p);
    for (int row = 0; row < 3; ++row)
      e[3 * row + col] = image[row];
  }
  return OrthMap(e);
}

Cycle apply_orth(const OrthMap& t, const Cycle& p)
{
  if (p.is_zero())
    throw NotACycle();
  return {t(0, 0) * p.a + t(0, 1) * p.b + t(0, 2) * p.c,
          t(1, 0) * p.a + t(1, 1) * p.b + t(1, 2) * p.c,
          t(2, 0) * p.a + t(2, 1) * p.b + t(2, 2) * p.c};
}

ProjPoint act_on_point(const OrthMap& t, const ProjPoint& point)
{
  return cycle_to_point(apply_orth(t, point_to_cycle(point)));
}

MobiusMap involution(const Cycle& p)
{
  if (is_isotropic(p))
    throw DomainError("cycle " + p.to_string() +
                      " is isotropic and defines no involution");
  const auto two = Scalar::from_int(p.field(), 2);
  return MobiusMap({-p.b, -two * p.c, two * p.a, p.b});
}

Cycle involution_cycle(const MobiusMap& m)
{
  if (!m.is_involution())
    throw DomainError("matrix " + m.to_string() + " is not an involution");
  const auto half = Scalar::from_int(m.field(), 2).inverse();
  return {half * m(1, 0), -m(0, 0), -half * m(0, 1)};
}

ProjPoint apply_mobius(const MobiusMap& m, const ProjPoint& point)
{
  return ProjPoint::homogeneous(m(0, 0) * point.x() + m(0, 1) * point.y(),
                                m(1, 0) * point.x() + m(1, 1) * point.y());
}

MobiusMap mobius_from_three_points(const ProjPoint& p0, const ProjPoint& p1,
                                   const ProjPoint& pinf)
{
  if (p0 == p1 || p0 == pinf || p1 == pinf)
    throw DegenerateError("frame points " + p0.to_string() + ", " +
                          p1.to_string() + ", " + pinf.to_string() +
                          " are not pairwise distinct");
  // Columns are multiples of pinf and p0 chosen so that (1, 1) lands on p1.
  const auto lambda = det2(p1, p0);
  const auto mu = det2(pinf, p1);
  return MobiusMap({lambda * pinf.x(), mu * p0.x(), lambda * pinf.y(), mu * p0.y()});
}

OrthMap pgl_to_so(const MobiusMap& m)
{
  const auto& al = m(0, 0);
  const auto& be = m(0, 1);
  const auto& ga = m(1, 0);
  const auto& de = m(1, 1);
  const auto field = m.field();
  const auto two = Scalar::from_int(field, 2);
  const auto inv_det = (al * de - be * ga).inverse();
  // Substitution action on binary quadratic forms, normalized to det +1.
  OrthMap::Entries e{de * de,         -de * ga,          ga * ga,
                     -two * be * de,  al * de + be * ga, -two * al * ga,
                     be * be,         -al * be,          al * al};
  for (auto& x : e)
    x *= inv_det;
  return OrthMap(e);
}

MobiusMap so_to_pgl(const OrthMap& t)
{
  if (!is_orthogonal(t))
    throw DomainError("matrix " + t.to_string() + " is not orthogonal");
  const auto field = t.field();
  const auto zero = ProjPoint::finite(Scalar::zero(field));
  const auto one = ProjPoint::finite(Scalar::one(field));
  const auto inf = ProjPoint::infinity(field);
  return mobius_from_three_points(act_on_point(t, zero), act_on_point(t, one),
                                  act_on_point(t, inf));
}

// Trace-zero N with N * M trace zero gives M = N * (N * M) in PGL. The
// admissible N form a plane {x(alpha - delta) + y gamma + z beta = 0} of
// [[x, y], [z, -x]], which always contains non-singular points.
std::optional<CyclePair> factor_into_involutions(
    const MobiusMap& m, const std::function<bool(const CyclePair&)>& accept)
{
  if (m.is_identity())
    return std::nullopt;
  const auto field = m.field();
  const Vec3 form{m(0, 0) - m(1, 1), m(1, 0), m(0, 1)};
  OrthMap::Entries rows{form[0], form[1], form[2], Scalar::zero(field),
                        Scalar::zero(field), Scalar::zero(field),
                        Scalar::zero(field), Scalar::zero(field),
                        Scalar::zero(field)};
  const auto plane = kernel(OrthMap(rows));
  if (plane.size() != 2)
    return std::nullopt;

  // Walk the lines of the plane: k0, then s k0 + k1 for s = 0, 1, -1, 2, ...
  // Over F_p this visits all p + 1 lines; over Q the search is capped.
  const long limit = field.is_rational() ? 64 : static_cast<long>(field.characteristic());
  std::vector<Vec3> lines{plane[0]};
  for (long i = 0; i < limit; ++i)
  {
    const long s = (i % 2 == 0) ? i / 2 : -(i + 1) / 2;
    const auto k = Scalar::from_int(field, s);
    lines.push_back({k * plane[0][0] + plane[1][0], k * plane[0][1] + plane[1][1],
                     k * plane[0][2] + plane[1][2]});
  }
  for (const auto& v : lines)
  {
    const auto& x = v[0];
    const auto& y = v[1];
    const auto& z = v[2];
    if ((x * x + y * z).is_zero())
      continue;
    const MobiusMap n({x, y, z, -x});
    const auto nm = n * m;
    if (!nm.is_involution())
      continue;
    CyclePair pq{involution_cycle(n), involution_cycle(nm)};
    if (involution(pq.first) * involution(pq.second) == m && accept(pq))
      return pq;
  }
  throw DomainError("no admissible involution pair found for " + m.to_string());
}

std::optional<CyclePair> decompose_two_reflections(const OrthMap& t)
{
  return decompose_two_reflections(t, [](const CyclePair&) { return true; });
}

std::optional<CyclePair> decompose_two_reflections(
    const OrthMap& t, const std::function<bool(const CyclePair&)>& accept)
{
  if (!is_orthogonal(t) || !is_special(t))
    throw DomainError("matrix " + t.to_string() + " is not in SO(E)");
  if (t.is_identity())
    return std::nullopt;

  // If Tr - r is nonisotropic, reflection(Tr - r) swaps r and Tr, so
  // reflection(Tr - r) * T fixes r and has determinant -1; when it is itself a
  // reflection we have T = reflection(Tr - r) * reflection(q).
  auto try_candidate = [&](const Cycle& r) -> std::optional<CyclePair> {
    const auto d = apply_orth(t, r) - r;
    if (d.is_zero() || is_isotropic(d))
      return std::nullopt;
    const auto sd = reflection(d);
    const auto q = as_reflection(sd * t);
    if (!q)
      return std::nullopt;
    CyclePair pq{d, *q};
    if (sd * reflection(*q) == t && accept(pq))
      return pq;
    return std::nullopt;
  };

  const auto field = t.field();
  for (const auto& r : fixed_candidates(field))
    if (auto pq = try_candidate(r))
      return pq;
  if (!field.is_rational())
  {
    const long p = field.characteristic();
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b)
        for (long c = 0; c < p; ++c)
          if (a != 0 || b != 0 || c != 0)
            if (auto pq = try_candidate(Cycle::from_ints(field, a, b, c)))
              return pq;
  }

  auto verified = [&](const CyclePair& pq) {
    return reflection(pq.first) * reflection(pq.second) == t && accept(pq);
  };
  return factor_into_involutions(so_to_pgl(t), verified);
}

std::optional<CyclePair> mobius_as_two_involutions(const MobiusMap& m)
{
  if (m.is_identity())
    return std::nullopt;
  const bool involutive = m.is_involution();
  return decompose_two_reflections(pgl_to_so(m), [&](const CyclePair& pq) {
    return !involutive ||
           (!(involution(pq.first) == m) && !(involution(pq.second) == m));
  });
}

OrthMap parse_orth(const FieldSpec& field, std::string_view text)
{
  const auto rows = detail::split(text, ';');
  OrthMap::Entries e;
  bool ok = rows.size() == 3;
  for (std::size_t r = 0; ok && r < 3; ++r)
  {
    const auto cols = detail::split(rows[r], ',');
    ok = cols.size() == 3;
    for (std::size_t c = 0; ok && c < 3; ++c)
      e[3 * r + c] = parse_scalar(field, cols[c]);
  }
  if (!ok)
    throw ParseError("malformed 3x3 matrix '" + std::string(text) + "'");
  return OrthMap(e);
}

MobiusMap parse_mobius(const FieldSpec& field, std::string_view text)
{
  const auto rows = detail::split(text, ';');
  MobiusMap::Entries e;
  bool ok = rows.size() == 2;
  for (std::size_t r = 0; ok && r < 2; ++r)
  {
    const auto cols = detail::split(rows[r], ',');
    ok = cols.size() == 2;
    for (std::size_t c = 0; ok && c < 2; ++c)
      e[2 * r + c] = parse_scalar(field, cols[c]);
  }
  if (!ok)
    throw ParseError("malformed 2x2 matrix '" + std::string(text) + "'");
  return MobiusMap(e);
}

}  // namespace quadline
