#include "quadline/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quadline/errors.hpp"
#include "quadline/invariants.hpp"

namespace quadline::verify {

namespace {

using Clock = std::chrono::steady_clock;

FieldSpec finite_field(unsigned q, unsigned max_q)
{
  if (q > max_q)
    throw DomainError("q = " + std::to_string(q) + " is outside the supported range (<= " +
                      std::to_string(max_q) + ")");
  if (q < 3 || !is_prime(q))
    throw DomainError("q = " + std::to_string(q) + " is not an odd prime");
  return FieldSpec::prime(q);
}

std::string status_name(CheckStatus s)
{
  switch (s)
  {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotRun: return "not run";
  }
  return "?";
}

// Accumulates the outcome of one named check; the first failure wins.
class Check
{
public:
  explicit Check(std::string name) : result_{std::move(name), CheckStatus::Pass, std::nullopt} {}

  bool failed() const { return result_.status == CheckStatus::Fail; }

  void fail(std::string witness)
  {
    if (failed())
      return;
    result_.status = CheckStatus::Fail;
    result_.witness = std::move(witness);
  }

  // Runs `body`; an exception escaping it is recorded as a failure.
  void guard(const std::string& context, const std::function<void()>& body)
  {
    try
    {
      body();
    }
    catch (const std::exception& e)
    {
      fail(context + ": " + e.what());
    }
  }

  CheckResult result() const { return result_; }

private:
  CheckResult result_;
};

std::string tuple_string(const std::vector<ProjPoint>& pts, const std::array<int, 4>& idx)
{
  return "(" + pts[idx[0]].to_string() + ", " + pts[idx[1]].to_string() + ", " +
         pts[idx[2]].to_string() + ", " + pts[idx[3]].to_string() + ")";
}

std::string perm_string(const std::vector<ProjPoint>& pts, const Permutation& perm)
{
  std::string out = "{";
  for (std::size_t i = 0; i < perm.size(); ++i)
  {
    if (i > 0)
      out += ", ";
    out += pts[i].to_string() + "->" + pts[perm[i]].to_string();
  }
  return out + "}";
}

template <typename T>
bool sorted_contains(const std::vector<T>& sorted, const T& value)
{
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

// Everything a sweep over F_q needs, enumerated once.
struct Context
{
  unsigned q;
  FieldSpec field;
  std::vector<ProjPoint> points;
  std::vector<MobiusMap> pgl;
  std::vector<OrthMap> so;
  std::vector<Cycle> cycles;  // all nonzero triples

  explicit Context(unsigned q_)
      : q(q_),
        field(finite_field(q_, max_exhaustive_q)),
        points(enumerate_points(q_)),
        pgl(enumerate_pgl(q_)),
        so(enumerate_so(q_))
  {
    const long p = q;
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b)
        for (long c = 0; c < p; ++c)
          if (a != 0 || b != 0 || c != 0)
            cycles.push_back(Cycle::from_ints(field, a, b, c));
  }

  VerificationReport report() const
  {
    VerificationReport r;
    r.field = field;
    r.counts = {points.size(), pgl.size(), so.size()};
    return r;
  }
};

void add_isotropy(const Context& ctx, VerificationReport& report)
{
  const auto& f = ctx.field;
  const auto four = Scalar::from_int(f, 4);

  Check classification("isotropy_classification");
  Check zero_law("zero_point_orthogonality");
  for (const auto& p : ctx.cycles)
  {
    classification.guard(p.to_string(), [&] {
      const bool zero_cycle = p.a.is_zero() && p.b.is_zero();
      const bool flat_square = !p.a.is_zero() && (p.b * p.b - four * p.a * p.c).is_zero();
      const bool iso = is_isotropic(p);
      if (iso != (zero_cycle || flat_square))
        classification.fail("cycle " + p.to_string());
      if (iso != (zero_points(p).size() == 1))
        classification.fail("cycle " + p.to_string() + " zero set size");
    });
    zero_law.guard(p.to_string(), [&] {
      const auto zeros = zero_points(p);
      for (const auto& pt : ctx.points)
      {
        const bool is_zero = std::find(zeros.begin(), zeros.end(), pt) != zeros.end();
        if (is_zero != orthogonal(p, point_to_cycle(pt)))
          zero_law.fail("cycle " + p.to_string() + ", point " + pt.to_string());
      }
    });
  }

  Check round_trip("point_round_trip");
  Check distinct("distinct_points_pair_nonzero");
  for (const auto& pt : ctx.points)
  {
    round_trip.guard(pt.to_string(), [&] {
      if (!(cycle_to_point(point_to_cycle(pt)) == pt))
        round_trip.fail("point " + pt.to_string());
    });
    for (const auto& other : ctx.points)
      if (!(pt == other) && pair(point_to_cycle(pt), point_to_cycle(other)).is_zero())
        distinct.fail("points " + pt.to_string() + ", " + other.to_string());
  }

  for (const auto* c : {&classification, &zero_law, &round_trip, &distinct})
    report.checks.push_back(c->result());
}

void add_reflections(const Context& ctx, VerificationReport& report)
{
  const auto id = OrthMap::identity(ctx.field);
  const auto minus_one = Scalar::from_int(ctx.field, -1);
  Check equivalence("reflection_matches_involution");
  Check shape("reflection_involutive");
  for (const auto& p : ctx.cycles)
  {
    if (is_isotropic(p))
      continue;
    equivalence.guard(p.to_string(), [&] {
      const auto r = reflection(p);
      const auto m = involution(p);
      if (!(r * r == id) || !(r.determinant() == minus_one) || !is_orthogonal(r))
        shape.fail("cycle " + p.to_string());
      for (const auto& pt : ctx.points)
        if (!(act_on_point(r, pt) == apply_mobius(m, pt)))
          equivalence.fail("cycle " + p.to_string() + ", point " + pt.to_string());
    });
  }
  report.checks.push_back(equivalence.result());
  report.checks.push_back(shape.result());
}

void add_cross_ratios(const Context& ctx, VerificationReport& report)
{
  const auto& pts = ctx.points;
  const int n = static_cast<int>(pts.size());
  std::vector<std::array<int, 4>> tuples;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (i != j && i != k && i != l && j != k && j != l && k != l)
            tuples.push_back({i, j, k, l});

  Check square("quadric_cross_ratio_is_square");
  for (const auto& t : tuples)
  {
    const auto c = classical_cross_ratio(pts[t[0]], pts[t[1]], pts[t[2]], pts[t[3]]);
    const auto qc = quadric_cross_ratio(pts[t[0]], pts[t[1]], pts[t[2]], pts[t[3]]);
    if (!(qc == c * c))
      square.fail("tuple " + tuple_string(pts, t));
  }

  // Exhaustive for q <= 5, a fixed-seed sample of (map, tuple) pairs above.
  Check invariance("quadric_cross_ratio_pgl_invariant");
  auto check_one = [&](const MobiusMap& m, const std::array<int, 4>& t) {
    const auto before = quadric_cross_ratio(pts[t[0]], pts[t[1]], pts[t[2]], pts[t[3]]);
    const auto after = quadric_cross_ratio(apply_mobius(m, pts[t[0]]), apply_mobius(m, pts[t[1]]),
                                           apply_mobius(m, pts[t[2]]), apply_mobius(m, pts[t[3]]));
    if (!(before == after))
      invariance.fail("map " + m.to_string() + ", tuple " + tuple_string(pts, t));
  };
  if (ctx.q <= max_bruteforce_q)
  {
    for (const auto& m : ctx.pgl)
      for (const auto& t : tuples)
        check_one(m, t);
  }
  else
  {
    std::mt19937_64 rng(0xC0FFEE + ctx.q);
    std::uniform_int_distribution<std::size_t> pick_map(0, ctx.pgl.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_tuple(0, tuples.size() - 1);
    for (int i = 0; i < 10000; ++i)
    {
      const auto mi = pick_map(rng);
      const auto ti = pick_tuple(rng);
      check_one(ctx.pgl[mi], tuples[ti]);
    }
  }

  Check two_point("pairing_two_point_law");
  const auto minus_two = Scalar::from_int(ctx.field, -2);
  for (const auto& u : pts)
    for (const auto& v : pts)
    {
      if (u == v || u.is_infinity() || v.is_infinity())
        continue;
      const auto d = u.value() - v.value();
      if (!(pair(point_to_cycle(u), point_to_cycle(v)) == minus_two * d * d))
        two_point.fail("points " + u.to_string() + ", " + v.to_string());
    }

  report.checks.push_back(square.result());
  report.checks.push_back(invariance.result());
  report.checks.push_back(two_point.result());
}

void add_isomorphism(const Context& ctx, VerificationReport& report)
{
  const auto q = ctx.q;
  const std::size_t expected = static_cast<std::size_t>(q) * q * q - q;

  Check orders("group_orders");
  if (ctx.so.size() != expected || ctx.pgl.size() != expected)
    orders.fail("|SO| = " + std::to_string(ctx.so.size()) + ", |PGL| = " +
                std::to_string(ctx.pgl.size()) + ", q^3 - q = " + std::to_string(expected));
  report.checks.push_back(orders.result());

  if (q <= max_bruteforce_q)
  {
    Check cross("so_enumeration_methods_agree");
    if (enumerate_so_bruteforce(q) != enumerate_so_closure(q))
      cross.fail("brute-force and reflection-closure sets differ");
    report.checks.push_back(cross.result());
  }

  Check members("so_membership");
  for (const auto& t : ctx.so)
    if (!is_orthogonal(t) || !is_special(t))
      members.fail("matrix " + t.to_string());
  report.checks.push_back(members.result());

  Check injective("so_to_pgl_injective");
  Check surjective("so_to_pgl_surjective");
  std::vector<MobiusMap> images;
  images.reserve(ctx.so.size());
  for (const auto& t : ctx.so)
    injective.guard(t.to_string(), [&] { images.push_back(so_to_pgl(t)); });
  if (!injective.failed())
  {
    std::vector<std::pair<MobiusMap, std::size_t>> tagged;
    for (std::size_t i = 0; i < images.size(); ++i)
      tagged.emplace_back(images[i], i);
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t i = 1; i < tagged.size(); ++i)
      if (tagged[i - 1].first == tagged[i].first)
        injective.fail("matrices " + ctx.so[tagged[i - 1].second].to_string() + " and " +
                       ctx.so[tagged[i].second].to_string() + " share image " +
                       tagged[i].first.to_string());
    std::sort(images.begin(), images.end());
    for (const auto& m : ctx.pgl)
      if (!sorted_contains(images, m))
        surjective.fail("map " + m.to_string() + " has no preimage");
  }
  else
  {
    surjective.fail("so_to_pgl raised an error");
  }
  report.checks.push_back(injective.result());
  report.checks.push_back(surjective.result());

  Check round_trip("pgl_round_trip");
  for (const auto& m : ctx.pgl)
    round_trip.guard(m.to_string(), [&] {
      const auto t = pgl_to_so(m);
      if (!is_orthogonal(t) || !is_special(t) || !(so_to_pgl(t) == m))
        round_trip.fail("map " + m.to_string());
    });
  report.checks.push_back(round_trip.result());

  Check homomorphism("homomorphism");
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const auto& t1 = ctx.so[i];
    const auto& t2 = ctx.so[j];
    if (!(so_to_pgl(t1 * t2) == so_to_pgl(t1) * so_to_pgl(t2)))
      homomorphism.fail("so_to_pgl on " + t1.to_string() + " and " + t2.to_string());
    const auto& m1 = ctx.pgl[i];
    const auto& m2 = ctx.pgl[j];
    if (!(pgl_to_so(m1 * m2) == pgl_to_so(m1) * pgl_to_so(m2)))
      homomorphism.fail("pgl_to_so on " + m1.to_string() + " and " + m2.to_string());
  };
  if (!orders.failed())
  {
    if (q == 3)
    {
      for (std::size_t i = 0; i < expected; ++i)
        for (std::size_t j = 0; j < expected; ++j)
          check_pair(i, j);
    }
    else
    {
      std::mt19937_64 rng(0x5EED + q);
      std::uniform_int_distribution<std::size_t> pick(0, expected - 1);
      for (int k = 0; k < 10000; ++k)
      {
        const auto i = pick(rng);
        const auto j = pick(rng);
        check_pair(i, j);
      }
    }
  }
  else
  {
    homomorphism.fail("group orders differ");
  }
  report.checks.push_back(homomorphism.result());
}

void add_faithful(const Context& ctx, VerificationReport& report)
{
  const auto& f = ctx.field;
  Check faithful("faithful_action");
  std::size_t fixers = 0;
  for (const auto& t : ctx.so)
  {
    const bool fixes_all = std::all_of(ctx.points.begin(), ctx.points.end(),
                                       [&](const ProjPoint& p) { return act_on_point(t, p) == p; });
    if (!fixes_all)
      continue;
    ++fixers;
    if (!t.is_identity())
      faithful.fail("matrix " + t.to_string() + " fixes every point");
  }
  if (fixers != 1 && !faithful.failed())
    faithful.fail("identity missing from the enumerated group");
  report.checks.push_back(faithful.result());

  const auto u = Cycle::from_ints(f, 1, 0, 0);
  const auto v = Cycle::from_ints(f, 1, -2, 1);
  const auto w = Cycle::from_ints(f, 0, 0, 1);
  const auto t = Cycle::from_ints(f, 1, -4, 4);
  const auto two = Scalar::from_int(f, 2);

  Check relation("frame_relation");
  if (!(-u + two * v + two * w == t))
    relation.fail("-u + 2v + 2w = " + (-u + two * v + two * w).to_string());
  report.checks.push_back(relation.result());

  Check frame("frame_fixers");
  const std::array<Cycle, 4> frame_cycles{u, v, w, t};
  for (const auto& m : ctx.so)
  {
    const bool fixes_frame = std::all_of(
        frame_cycles.begin(), frame_cycles.end(),
        [&](const Cycle& c) { return proportional(apply_orth(m, c), c); });
    if (fixes_frame && !m.is_identity())
      frame.fail("matrix " + m.to_string() + " fixes the frame");
  }
  report.checks.push_back(frame.result());
}

void add_decompositions(const Context& ctx, VerificationReport& report)
{
  Check so_pairs("so_two_reflections");
  for (const auto& t : ctx.so)
  {
    if (t.is_identity())
      continue;
    so_pairs.guard("matrix " + t.to_string(), [&] {
      const auto pq = decompose_two_reflections(t);
      if (!pq || is_isotropic(pq->first) || is_isotropic(pq->second) ||
          !(reflection(pq->first) * reflection(pq->second) == t))
        so_pairs.fail("matrix " + t.to_string());
    });
  }

  Check pgl_pairs("pgl_two_involutions");
  Check others("involutions_two_others");
  for (const auto& m : ctx.pgl)
  {
    if (m.is_identity())
      continue;
    auto& check = m.is_involution() ? others : pgl_pairs;
    check.guard("map " + m.to_string(), [&] {
      const auto pq = mobius_as_two_involutions(m);
      if (!pq)
      {
        check.fail("map " + m.to_string() + " reported as identity");
        return;
      }
      const auto first = involution(pq->first);
      const auto second = involution(pq->second);
      if (!(first * second == m))
        check.fail("map " + m.to_string() + " from " + pq->first.to_string() + " and " +
                   pq->second.to_string());
      if (m.is_involution() && (first == m || second == m))
        check.fail("map " + m.to_string() + " reused as its own factor");
    });
  }
  report.checks.push_back(so_pairs.result());
  report.checks.push_back(pgl_pairs.result());
  report.checks.push_back(others.result());
}

void add_stabilizer(const Context& ctx, VerificationReport& report)
{
  const auto p = Cycle::from_ints(ctx.field, 0, 1, 0);
  Check check("stabilizer_invariant");
  std::size_t stabilizer_size = 0;
  for (const auto& m : ctx.pgl)
  {
    const auto image = apply_orth(pgl_to_so(m), p);
    if (!proportional(image, p))
      continue;
    ++stabilizer_size;
    const auto rescaled = canonical_multiple(image);
    for (const auto& x : ctx.points)
      for (const auto& y : ctx.points)
      {
        if (x == y)
          continue;
        if (!(stabilizer_invariant(apply_mobius(m, x), apply_mobius(m, y), rescaled) ==
              stabilizer_invariant(x, y, p)))
          check.fail("map " + m.to_string() + ", points " + x.to_string() + ", " + y.to_string());
      }
  }
  if (stabilizer_size < 2)
    check.fail("stabilizer of X has only " + std::to_string(stabilizer_size) + " element(s)");
  report.checks.push_back(check.result());
}

// Squared classical cross ratio of every pairwise-distinct 4-tuple, indexed
// by ((i * n + j) * n + k) * n + l.
struct SquareTable
{
  int n;
  std::vector<std::optional<Scalar>> values;

  explicit SquareTable(const std::vector<ProjPoint>& pts) : n(static_cast<int>(pts.size()))
  {
    values.resize(static_cast<std::size_t>(n) * n * n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            if (i != j && i != k && i != l && j != k && j != l && k != l)
            {
              const auto c = classical_cross_ratio(pts[i], pts[j], pts[k], pts[l]);
              values[index(i, j, k, l)] = c * c;
            }
  }

  std::size_t index(int i, int j, int k, int l) const
  {
    return ((static_cast<std::size_t>(i) * n + j) * n + k) * n + l;
  }

  std::optional<std::array<int, 4>> violation(const Permutation& perm) const
  {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
          {
            const auto& before = values[index(i, j, k, l)];
            if (!before)
              continue;
            if (!(*before == *values[index(perm[i], perm[j], perm[k], perm[l])]))
              return std::array<int, 4>{i, j, k, l};
          }
    return std::nullopt;
  }
};

void require_preserver_range(unsigned q)
{
  if (q != 3 && q != 5)
    throw DomainError("the bijection sweep supports q = 3 and q = 5 only");
}

void add_preservers(const Context& ctx, VerificationReport& report)
{
  Check check("square_cross_ratio_preservers");
  const auto preservers = square_cross_ratio_preservers(ctx.q);
  std::vector<Permutation> induced;
  for (const auto& m : ctx.pgl)
    induced.push_back(as_permutation(ctx.q, m));
  std::sort(induced.begin(), induced.end());
  for (const auto& perm : preservers)
    if (!sorted_contains(induced, perm))
      check.fail("bijection " + perm_string(ctx.points, perm) + " preserves but is not projective");
  for (const auto& perm : induced)
    if (!std::binary_search(preservers.begin(), preservers.end(), perm))
    {
      const auto bad = find_cross_ratio_violation(ctx.q, perm);
      check.fail("projective bijection " + perm_string(ctx.points, perm) + " breaks tuple " +
                 (bad ? tuple_string(ctx.points, *bad) : std::string("?")));
    }
  report.checks.push_back(check.result());
}

template <typename Fn>
VerificationReport timed(unsigned q, Fn&& fn)
{
  const auto start = Clock::now();
  const Context ctx(q);
  auto report = ctx.report();
  fn(ctx, report);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace

bool VerificationReport::passed() const
{
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
  for (const auto& c : checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

std::string to_json(const VerificationReport& report, bool with_elapsed)
{
  nlohmann::ordered_json doc;
  doc["field"] = report.field.to_string();
  doc["counts"] = {{"points", report.counts.points},
                   {"pgl_size", report.counts.pgl_size},
                   {"so_size", report.counts.so_size}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks)
  {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = status_name(c.status);
    entry["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nullptr;
    checks.push_back(entry);
  }
  doc["checks"] = checks;
  if (with_elapsed)
    doc["elapsed"] = report.elapsed.count();
  return doc.dump();
}

std::string to_text(const VerificationReport& report)
{
  std::ostringstream out;
  out << "field " << report.field.to_string() << '\n'
      << "points " << report.counts.points << '\n'
      << "pgl_size " << report.counts.pgl_size << '\n'
      << "so_size " << report.counts.so_size << '\n';
  for (const auto& c : report.checks)
  {
    out << status_name(c.status) << ' ' << c.name;
    if (c.witness)
      out << "  witness: " << *c.witness;
    out << '\n';
  }
  out << (report.passed() ? "PASSED" : "FAILED") << '\n';
  out << "elapsed " << report.elapsed.count() << "s\n";
  return out.str();
}

std::vector<ProjPoint> enumerate_points(unsigned q)
{
  const auto field = finite_field(q, max_points_q);
  std::vector<ProjPoint> out;
  for (unsigned r = 0; r < q; ++r)
    out.push_back(ProjPoint::finite(Scalar::residue(r, q)));
  out.push_back(ProjPoint::infinity(field));
  return out;
}

std::vector<MobiusMap> enumerate_pgl(unsigned q)
{
  const auto field = finite_field(q, max_exhaustive_q);
  const long p = q;
  std::vector<MobiusMap> out;
  // Canonical forms: first nonzero entry is 1.
  for (long i = 0; i < p * p * p * p; ++i)
  {
    const std::array<long, 4> e{i / (p * p * p), (i / (p * p)) % p, (i / p) % p, i % p};
    const auto lead = std::find_if(e.begin(), e.end(), [](long x) { return x != 0; });
    if (lead == e.end() || *lead != 1)
      continue;
    if ((e[0] * e[3] - e[1] * e[2]) % p == 0)
      continue;
    out.push_back(MobiusMap::from_ints(field, e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrthMap> enumerate_so(unsigned q)
{
  return q <= max_bruteforce_q ? enumerate_so_bruteforce(q) : enumerate_so_closure(q);
}

std::vector<OrthMap> enumerate_so_bruteforce(unsigned q)
{
  const auto field = finite_field(q, max_bruteforce_q);
  const long p = q;
  auto mod = [p](long x) { return ((x % p) + p) % p; };
  // x^T G y for the Gram matrix [[0,0,-2],[0,1,0],[-2,0,0]].
  auto bilinear = [&](const long* x, const long* y) {
    return mod(x[1] * y[1] - 2 * (x[0] * y[2] + x[2] * y[0]));
  };
  const long gram[3][3] = {{0, 0, mod(-2)}, {0, 1, 0}, {mod(-2), 0, 0}};

  std::vector<OrthMap> out;
  long total = 1;
  for (int i = 0; i < 9; ++i)
    total *= p;
  std::array<long, 9> m{};
  for (long idx = 0; idx < total; ++idx)
  {
    long rest = idx;
    for (int i = 8; i >= 0; --i)
    {
      m[i] = rest % p;
      rest /= p;
    }
    // Columns of M; M^T G M = G means column pairings reproduce G.
    const long cols[3][3] = {{m[0], m[3], m[6]}, {m[1], m[4], m[7]}, {m[2], m[5], m[8]}};
    bool ok = true;
    for (int i = 0; ok && i < 3; ++i)
      for (int j = i; ok && j < 3; ++j)
        ok = bilinear(cols[i], cols[j]) == gram[i][j];
    if (!ok)
      continue;
    const auto candidate = OrthMap::from_ints(field, m);
    if (is_orthogonal(candidate) && is_special(candidate))
      out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrthMap> enumerate_so_closure(unsigned q)
{
  const auto field = finite_field(q, max_exhaustive_q);
  const long p = q;
  std::set<OrthMap> reflections;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
      {
        if (a == 0 && b == 0 && c == 0)
          continue;
        const auto cyc = Cycle::from_ints(field, a, b, c);
        if (!is_isotropic(cyc))
          reflections.insert(reflection(cyc));
      }
  std::set<OrthMap> products;
  for (const auto& r1 : reflections)
    for (const auto& r2 : reflections)
      products.insert(r1 * r2);
  return {products.begin(), products.end()};
}

Permutation as_permutation(unsigned q, const MobiusMap& m)
{
  const auto pts = enumerate_points(q);
  Permutation perm;
  for (const auto& pt : pts)
  {
    const auto image = apply_mobius(m, pt);
    perm.push_back(image.is_infinity() ? static_cast<int>(q)
                                       : static_cast<int>(image.value().residue_value()));
  }
  return perm;
}

std::optional<std::array<int, 4>> find_cross_ratio_violation(unsigned q, const Permutation& perm)
{
  const auto pts = enumerate_points(q);
  if (perm.size() != pts.size())
    throw DomainError("permutation has the wrong size");
  return SquareTable(pts).violation(perm);
}

std::vector<Permutation> square_cross_ratio_preservers(unsigned q)
{
  require_preserver_range(q);
  const auto pts = enumerate_points(q);
  const SquareTable table(pts);
  Permutation perm(pts.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<int>(i);
  std::vector<Permutation> out;
  do
  {
    if (!table.violation(perm))
      out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

VerificationReport check_isotropy(unsigned q) { return timed(q, add_isotropy); }
VerificationReport check_reflections(unsigned q) { return timed(q, add_reflections); }
VerificationReport check_cross_ratios(unsigned q) { return timed(q, add_cross_ratios); }
VerificationReport check_isomorphism(unsigned q) { return timed(q, add_isomorphism); }
VerificationReport check_faithful(unsigned q) { return timed(q, add_faithful); }
VerificationReport check_decompositions(unsigned q) { return timed(q, add_decompositions); }
VerificationReport check_stabilizer(unsigned q) { return timed(q, add_stabilizer); }

VerificationReport check_preservers(unsigned q)
{
  require_preserver_range(q);
  return timed(q, add_preservers);
}

VerificationReport run_all(unsigned q)
{
  return timed(q, [](const Context& ctx, VerificationReport& report) {
    add_isotropy(ctx, report);
    add_reflections(ctx, report);
    add_cross_ratios(ctx, report);
    add_isomorphism(ctx, report);
    add_faithful(ctx, report);
    add_decompositions(ctx, report);
    add_stabilizer(ctx, report);
    if (ctx.q == 3 || ctx.q == 5)
      add_preservers(ctx, report);
    else
      report.checks.push_back({"square_cross_ratio_preservers", CheckStatus::NotRun, std::nullopt});
  });
}

}  // namespace quadline::verify
