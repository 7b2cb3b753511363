// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "quadline/errors.hpp"
#include "quadline/invariants.hpp"
#include "quadline/transform.hpp"
#include "quadline/verify.hpp"

using namespace quadline;

namespace {

const FieldSpec Q = FieldSpec::rational();

struct Failure
{
  std::string what;
};

void expect(bool ok, const std::string& what)
{
  if (!ok)
    throw Failure{what};
}

Scalar s(long v, const FieldSpec& f)
{
  return Scalar::from_int(f, v);
}

std::vector<Cycle> nonzero_cycles(unsigned q)
{
  const auto f = FieldSpec::prime(q);
  std::vector<Cycle> out;
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        if (a || b || c)
          out.push_back(Cycle::from_ints(f, a, b, c));
  return out;
}

bool distinct(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d)
{
  return !(a == b) && !(a == c) && !(a == d) && !(b == c) && !(b == d) && !(c == d);
}

ProjPoint random_point(std::mt19937_64& rng)
{
  std::uniform_int_distribution<long> d(-20, 20);
  if (d(rng) == 0)
    return ProjPoint::infinity(Q);
  const long den = d(rng);
  return ProjPoint::finite(Scalar::rational(d(rng), den == 0 ? 1 : den));
}

void expect_checks(const verify::VerificationReport& report,
                   std::initializer_list<const char*> names)
{
  for (const char* name : names)
  {
    const auto* c = report.find(name);
    expect(c && c->status == verify::CheckStatus::Pass,
           report.field.to_string() + " " + name +
               (c && c->witness ? ": " + *c->witness : std::string()));
  }
}

// 1. isotropy characterization and point round trip over F3, F5
void isotropy()
{
  for (unsigned q : {3u, 5u})
  {
    const auto cycles = nonzero_cycles(q);
    expect(cycles.size() == q * q * q - 1, "triple count");
    for (const auto& p : cycles)
    {
      const auto four = s(4, p.field());
      const bool expected = (p.a.is_zero() && p.b.is_zero()) ||
                            (!p.a.is_zero() && (p.b * p.b - four * p.a * p.c).is_zero());
      expect(is_isotropic(p) == expected, "isotropy of " + p.to_string());
    }
    for (const auto& P : verify::enumerate_points(q))
      expect(cycle_to_point(point_to_cycle(P)) == P, "round trip at " + P.to_string());
  }
}

// 2. reflection action equals involution action
void reflections()
{
  for (unsigned q : {3u, 5u, 7u})
  {
    const auto points = verify::enumerate_points(q);
    for (const auto& p : nonzero_cycles(q))
    {
      if (is_isotropic(p))
        continue;
      const auto r = reflection(p);
      const auto m = involution(p);
      for (const auto& P : points)
        expect(act_on_point(r, P) == apply_mobius(m, P),
               "f" + std::to_string(q) + " p=" + p.to_string() + " P=" + P.to_string());
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> d(-20, 20);
  int tested = 0;
  while (tested < 1000)
  {
    const auto p = Cycle::from_ints(Q, d(rng), d(rng), d(rng));
    if (p.is_zero() || is_isotropic(p))
      continue;
    const long den = d(rng);
    const auto P = den == 0 ? ProjPoint::infinity(Q)
                            : ProjPoint::finite(Scalar::rational(d(rng), den));
    expect(act_on_point(reflection(p), P) == apply_mobius(involution(p), P),
           "Q p=" + p.to_string() + " P=" + P.to_string());
    ++tested;
  }
}

// 3. SO(E) and PGL(2) isomorphism
void isomorphism()
{
  const auto brute5 = verify::enumerate_so_bruteforce(5);
  expect(brute5 == verify::enumerate_so_closure(5), "closure disagrees with brute force at q=5");
  for (unsigned q : {3u, 5u, 7u})
  {
    const auto report = verify::check_isomorphism(q);
    const auto order = q * q * q - q;
    expect(report.counts.so_size == order && report.counts.pgl_size == order,
           "group orders at q=" + std::to_string(q));
    expect_checks(report, {"group_orders", "so_membership", "so_to_pgl_injective",
                           "so_to_pgl_surjective", "pgl_round_trip", "homomorphism"});
  }
}

// 4. faithful action and the frame relation
void faithfulness()
{
  for (unsigned q : {3u, 5u, 7u})
  {
    const auto points = verify::enumerate_points(q);
    std::size_t fixers = 0;
    for (const auto& t : verify::enumerate_so(q))
    {
      const bool fixes_all = std::all_of(points.begin(), points.end(), [&](const ProjPoint& P) {
        return act_on_point(t, P) == P;
      });
      if (fixes_all)
      {
        ++fixers;
        expect(t.is_identity(), "non-identity fixer " + t.to_string());
      }
    }
    expect(fixers == 1, "identity must be the unique fixer");
  }
  const auto u = Cycle::from_ints(Q, 1, 0, 0), v = Cycle::from_ints(Q, 1, -2, 1),
             w = Cycle::from_ints(Q, 0, 0, 1), t = Cycle::from_ints(Q, 1, -4, 4);
  expect(t == -u + Scalar::rational(2, 1) * v + Scalar::rational(2, 1) * w, "frame relation");
}

// 5. two-reflection and two-involution decompositions
void decompositions()
{
  for (unsigned q : {3u, 5u})
    for (const auto& t : verify::enumerate_so(q))
    {
      const auto pq = decompose_two_reflections(t);
      if (t.is_identity())
      {
        expect(!pq, "identity must not decompose");
        continue;
      }
      expect(pq.has_value(), "no decomposition of " + t.to_string());
      expect(!is_isotropic(pq->first) && !is_isotropic(pq->second), "isotropic factor");
      expect(reflection(pq->first) * reflection(pq->second) == t,
             "recomposition of " + t.to_string());
    }
  std::size_t involutions = 0;
  for (const auto& m : verify::enumerate_pgl(5))
  {
    if (!m.is_involution())
      continue;
    ++involutions;
    const auto pq = mobius_as_two_involutions(m);
    expect(pq.has_value(), "no factorization of " + m.to_string());
    const auto n1 = involution(pq->first), n2 = involution(pq->second);
    expect(n1.is_involution() && n2.is_involution(), "factors must be involutions");
    expect(!(n1 == m) && !(n2 == m), "factor equals " + m.to_string());
    expect(n1 * n2 == m, "composition of " + m.to_string());
  }
  expect(involutions > 0, "no involutions enumerated");
}

// 6. quadric cross ratio is the squared classical one; pairing of point cycles
void cross_ratios()
{
  for (unsigned q : {3u, 5u, 7u})
  {
    const auto points = verify::enumerate_points(q);
    for (const auto& x : points)
      for (const auto& y : points)
        for (const auto& z : points)
          for (const auto& t : points)
            if (distinct(x, y, z, t))
            {
              const auto c = classical_cross_ratio(x, y, z, t);
              expect(quadric_cross_ratio(x, y, z, t) == c * c, "cross ratio mismatch");
            }
  }
  std::mt19937_64 rng(77);
  for (int tested = 0; tested < 1000;)
  {
    const auto x = random_point(rng), y = random_point(rng), z = random_point(rng),
               t = random_point(rng);
    if (!distinct(x, y, z, t))
      continue;
    const auto c = classical_cross_ratio(x, y, z, t);
    expect(quadric_cross_ratio(x, y, z, t) == c * c, "rational cross ratio mismatch");
    ++tested;
  }

  const auto f5 = FieldSpec::prime(5);
  for (unsigned a = 0; a < 5; ++a)
    for (unsigned b = 0; b < 5; ++b)
    {
      const auto u = Scalar::residue(a, 5), v = Scalar::residue(b, 5);
      expect(pair(point_to_cycle(ProjPoint::finite(u)), point_to_cycle(ProjPoint::finite(v))) ==
                 s(-2, f5) * (u - v) * (u - v),
             "pairing law over F5");
    }
  for (int tested = 0; tested < 1000;)
  {
    const auto x = random_point(rng), y = random_point(rng);
    if (x.is_infinity() || y.is_infinity())
      continue;
    const auto d = x.value() - y.value();
    expect(pair(point_to_cycle(x), point_to_cycle(y)) == s(-2, Q) * d * d,
           "pairing law over Q");
    ++tested;
  }
}

// 7. squared-cross-ratio preservers are exactly PGL
void preservers()
{
  for (unsigned q : {3u, 5u})
  {
    const auto pres = verify::square_cross_ratio_preservers(q);
    std::vector<verify::Permutation> pgl;
    for (const auto& m : verify::enumerate_pgl(q))
      pgl.push_back(verify::as_permutation(q, m));
    std::sort(pgl.begin(), pgl.end());
    expect(pres.size() == q * q * q - q, "preserver count at q=" + std::to_string(q));
    expect(pres == pgl, "preservers differ from PGL at q=" + std::to_string(q));
  }
}

// 8. stabilizer invariant
void stabilizer()
{
  const auto f3 = FieldSpec::prime(3);
  const auto p = Cycle::from_ints(f3, 0, 1, 0);
  const auto points = verify::enumerate_points(3);
  std::size_t stabilizers = 0;
  for (const auto& t : verify::enumerate_so(3))
  {
    if (!proportional(apply_orth(t, p), p))
      continue;
    ++stabilizers;
    for (const auto& x : points)
      for (const auto& y : points)
        if (!(x == y))
          expect(stabilizer_invariant(act_on_point(t, x), act_on_point(t, y), p) ==
                     stabilizer_invariant(x, y, p),
                 "invariant changed under " + t.to_string());
  }
  expect(stabilizers > 1, "stabilizer of p is trivial");

  const auto pq = Cycle::from_ints(Q, 0, 1, 0);
  auto P = [](long v) { return ProjPoint::finite(Scalar::rational(v, 1)); };
  const auto half = Scalar::rational(1, 2);
  expect(stabilizer_invariant(P(1), P(-1), pq) == half, "worked pair (1,-1)");
  expect(stabilizer_invariant(P(2), P(-2), pq) == half, "worked pair (2,-2)");
}

struct Criterion
{
  int number;
  const char* title;
  double limit_seconds;
  std::function<void()> body;
};

}  // namespace

int main()
{
  const std::vector<Criterion> criteria{
      {1, "isotropy and point round trip over F3, F5", 1, isotropy},
      {2, "reflection action equals involution action", 30, reflections},
      {3, "SO(E) isomorphic to PGL(2) for q = 3, 5, 7", 300, isomorphism},
      {4, "faithful action and frame relation", 300, faithfulness},
      {5, "two-reflection and two-involution decompositions", 300, decompositions},
      {6, "quadric cross ratio equals squared cross ratio", 300, cross_ratios},
      {7, "squared-cross-ratio preservers are PGL(2)", 120, preservers},
      {8, "stabilizer invariant", 300, stabilizer},
  };

  int failures = 0;
  for (const auto& c : criteria)
  {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try
    {
      c.body();
    }
    catch (const Failure& f)
    {
      ok = false;
      detail = f.what;
    }
    catch (const std::exception& e)
    {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs >= c.limit_seconds)
    {
      ok = false;
      detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    std::printf("%s [%d] %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.title, secs, c.limit_seconds, detail.empty() ? "" : ": ", detail.c_str());
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
