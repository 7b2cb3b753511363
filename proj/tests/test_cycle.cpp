#include <doctest.h>

#include <random>

#include "quadline/cycle.hpp"
#include "quadline/errors.hpp"

using namespace quadline;

namespace {

const FieldSpec Q = FieldSpec::rational();

Cycle cyc(long a, long b, long c, const FieldSpec& f = Q)
{
  return Cycle::from_ints(f, a, b, c);
}

ProjPoint pt(long u, const FieldSpec& f = Q)
{
  return ProjPoint::finite(Scalar::from_int(f, u));
}

Scalar s(long v, const FieldSpec& f = Q)
{
  return Scalar::from_int(f, v);
}

// Oracle: polarization of the discriminant, (D(p+q) - D(p) - D(q)) / 2.
Scalar polarized_pair(const Cycle& p, const Cycle& q)
{
  auto disc = [](const Cycle& c) { return c.b * c.b - s(4, c.field()) * c.a * c.c; };
  return (disc(p + q) - disc(p) - disc(q)) / s(2, p.field());
}

// Oracle: zeros of aX^2 + bXY + cY^2 found by evaluating at every point.
std::vector<ProjPoint> brute_zeros(const Cycle& p, unsigned q)
{
  const auto f = FieldSpec::prime(q);
  std::vector<ProjPoint> out;
  for (unsigned u = 0; u < q; ++u)
  {
    const auto x = Scalar::residue(u, q);
    if ((p.a * x * x + p.b * x + p.c).is_zero())
      out.push_back(ProjPoint::finite(x));
  }
  if (p.a.is_zero())
    out.push_back(ProjPoint::infinity(f));
  return out;
}

std::vector<Cycle> all_cycles(unsigned q)
{
  const auto f = FieldSpec::prime(q);
  std::vector<Cycle> out;
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        if (a || b || c)
          out.push_back(cyc(a, b, c, f));
  return out;
}

std::vector<ProjPoint> all_points(unsigned q)
{
  const auto f = FieldSpec::prime(q);
  std::vector<ProjPoint> out;
  for (long u = 0; u < q; ++u)
    out.push_back(pt(u, f));
  out.push_back(ProjPoint::infinity(f));
  return out;
}

Cycle random_cycle(std::mt19937_64& rng)
{
  std::uniform_int_distribution<long> d(-20, 20);
  while (true)
  {
    auto c = Cycle(Scalar::rational(d(rng), 1), Scalar::rational(d(rng), 1),
                   Scalar::rational(d(rng), 7));
    if (!c.is_zero())
      return c;
  }
}

}  // namespace

TEST_CASE("pair examples")
{
  CHECK(polarized_pair(cyc(1, 0, 0), cyc(0, 0, 1)) == s(-2));
  CHECK(pair(cyc(1, 0, 0), cyc(0, 0, 1)) == s(-2));
  CHECK(pair(cyc(1, -2, 1), cyc(1, -4, 4)) == s(-2));
  CHECK(pair(cyc(0, 3, 5), cyc(0, 3, 5)) == s(9));
  CHECK_THROWS_AS(pair(cyc(1, 0, 0), cyc(1, 0, 0, FieldSpec::prime(5))), FieldMismatch);
}

TEST_CASE("gram matrix of the basis")
{
  const std::array<Cycle, 3> basis{cyc(1, 0, 0), cyc(0, 1, 0), cyc(0, 0, 1)};
  const long gram[3][3] = {{0, 0, -2}, {0, 1, 0}, {-2, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
    {
      CHECK(polarized_pair(basis[i], basis[j]) == s(gram[i][j]));
      CHECK(pair(basis[i], basis[j]) == s(gram[i][j]));
    }
}

TEST_CASE("norm examples")
{
  CHECK(norm(cyc(1, 1, -6)) == s(25));
  CHECK(norm(cyc(0, 0, 5)) == s(0));
  CHECK(norm(cyc(1, -2, 1)) == s(0));
}

TEST_CASE("isotropy examples")
{
  CHECK(is_isotropic(cyc(0, 0, 7)));
  CHECK_FALSE(is_isotropic(cyc(0, 4, 1)));
  CHECK(is_isotropic(cyc(1, -4, 4)));
  CHECK_THROWS_AS(is_isotropic(cyc(0, 0, 0)), NotACycle);
  CHECK_THROWS_AS(cyc(0, 0, 0).degree(), NotACycle);
  CHECK(cyc(0, 2, 0).degree() == 1);
}

TEST_CASE("point <-> cycle examples")
{
  CHECK(point_to_cycle(pt(1)) == cyc(1, -2, 1));
  CHECK(point_to_cycle(ProjPoint::infinity(Q)) == cyc(0, 0, 1));
  CHECK(point_to_cycle(pt(-3)) == cyc(1, 6, 9));

  CHECK(cycle_to_point(cyc(1, -2, 1)) == pt(1));
  CHECK(cycle_to_point(cyc(0, 0, 5)) == ProjPoint::infinity(Q));
  CHECK(cycle_to_point(cyc(2, -8, 8)) == pt(2));
  CHECK_THROWS_AS(cycle_to_point(cyc(1, 0, -1)), DomainError);
  CHECK_THROWS_AS(cycle_to_point(cyc(0, 0, 0)), NotACycle);
}

TEST_CASE("zero point examples")
{
  CHECK(zero_points(cyc(1, 0, -1)) == std::vector{pt(-1), pt(1)});
  CHECK(zero_points(cyc(0, 1, 0)) == std::vector{pt(0), ProjPoint::infinity(Q)});
  CHECK(zero_points(cyc(1, 0, 1)).empty());
  const auto f5 = FieldSpec::prime(5);
  CHECK(zero_points(cyc(1, 0, 1, f5)) == std::vector{pt(2, f5), pt(3, f5)});
  CHECK(zero_points(cyc(1, -4, 4)) == std::vector{pt(2)});
  CHECK_THROWS_AS(zero_points(cyc(0, 0, 0)), NotACycle);
}

TEST_CASE("orthogonality examples")
{
  CHECK(orthogonal(cyc(1, 1, -6), point_to_cycle(pt(2))));
  CHECK(orthogonal(cyc(0, 0, 1), cyc(0, 0, 5)));
  CHECK_FALSE(orthogonal(cyc(0, 1, 0), cyc(1, -2, 1)));
  CHECK(pair(cyc(0, 1, 0), cyc(1, -2, 1)) == s(-2));
}

TEST_CASE("points and literals")
{
  CHECK(ProjPoint::homogeneous(s(6), s(3)) == pt(2));
  CHECK(ProjPoint::homogeneous(s(-4), s(0)) == ProjPoint::infinity(Q));
  CHECK_THROWS_AS(ProjPoint::homogeneous(s(0), s(0)), DomainError);
  CHECK_THROWS_AS(ProjPoint::infinity(Q).value(), DomainError);
  CHECK(parse_point(Q, "inf").is_infinity());
  CHECK(parse_point(Q, "-3/4").value() == Scalar::rational(-3, 4));
  CHECK(parse_cycle(Q, "1,-2,1/2") == Cycle(s(1), s(-2), Scalar::rational(1, 2)));
  CHECK_THROWS_AS(parse_cycle(Q, "1,2"), ParseError);
  CHECK_THROWS_AS(parse_cycle(Q, "1,2,3,4"), ParseError);
  CHECK_THROWS_AS(Cycle(s(1), s(1, FieldSpec::prime(3)), s(1)), FieldMismatch);
}

TEST_CASE("bilinearity and symmetry, exhaustive over F3")
{
  const auto f = FieldSpec::prime(3);
  const auto cycles = all_cycles(3);
  for (const auto& p : cycles)
    for (const auto& q : cycles)
    {
      CHECK(pair(p, q) == pair(q, p));
      CHECK(pair(p, q) == polarized_pair(p, q));
      for (long k = 1; k < 3; ++k)
        CHECK(pair(s(k, f) * p, q) == s(k, f) * pair(p, q));
    }
  // additivity on a slice keeps the sweep quadratic
  for (const auto& p : cycles)
    for (const auto& q : cycles)
      CHECK(pair(p + q, cycles[5]) == pair(p, cycles[5]) + pair(q, cycles[5]));
}

TEST_CASE("bilinearity and symmetry, randomized over Q")
{
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 300; ++i)
  {
    const auto p = random_cycle(rng);
    const auto q = random_cycle(rng);
    const auto r = random_cycle(rng);
    const auto k = Scalar::rational(d(rng), 5);
    CHECK(pair(p, q) == pair(q, p));
    CHECK(pair(k * p + q, r) == k * pair(p, r) + pair(q, r));
    CHECK(norm(p) == p.b * p.b - s(4) * p.a * p.c);
  }
}

TEST_CASE("isotropy classification and zero sets, exhaustive over F3 and F5")
{
  for (unsigned q : {3u, 5u})
  {
    for (const auto& p : all_cycles(q))
    {
      const auto zeros = zero_points(p);
      CHECK(zeros == brute_zeros(p, q));
      CHECK(is_isotropic(p) == (zeros.size() == 1));
      CHECK(is_isotropic(p) ==
            ((p.a.is_zero() && p.b.is_zero()) ||
             (!p.a.is_zero() && (p.b * p.b - s(4, p.field()) * p.a * p.c).is_zero())));
    }
  }
}

TEST_CASE("zero points are exactly the orthogonal quadric points, exhaustive over F3 and F5")
{
  for (unsigned q : {3u, 5u})
  {
    const auto points = all_points(q);
    for (const auto& p : all_cycles(q))
    {
      const auto zeros = zero_points(p);
      for (const auto& P : points)
      {
        const bool is_zero = std::find(zeros.begin(), zeros.end(), P) != zeros.end();
        CHECK(is_zero == orthogonal(p, point_to_cycle(P)));
      }
    }
  }
}

TEST_CASE("round trip and distinct-point pairing, exhaustive over F3, F5, F7")
{
  for (unsigned q : {3u, 5u, 7u})
  {
    const auto points = all_points(q);
    for (const auto& P : points)
    {
      CHECK(cycle_to_point(point_to_cycle(P)) == P);
      CHECK(is_isotropic(point_to_cycle(P)));
      for (long k = 1; k < q; ++k)
        CHECK(cycle_to_point(s(k, P.field()) * point_to_cycle(P)) == P);
      for (const auto& R : points)
        if (!(P == R))
          CHECK_FALSE(pair(point_to_cycle(P), point_to_cycle(R)).is_zero());
    }
  }
}

TEST_CASE("round trip, randomized over Q")
{
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 500; ++i)
  {
    long den = d(rng);
    if (den == 0)
      den = 1;
    const auto P = ProjPoint::finite(Scalar::rational(d(rng), den));
    CHECK(cycle_to_point(point_to_cycle(P)) == P);
  }
}

TEST_CASE("printed cycles re-parse")
{
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i)
  {
    const auto c = random_cycle(rng);
    CHECK(parse_cycle(Q, c.to_string()) == c);
  }
}
