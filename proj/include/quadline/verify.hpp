#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadline/transform.hpp"

namespace quadline::verify {

// Largest q for which the groups are enumerated exhaustively.
inline constexpr unsigned max_exhaustive_q = 13;
// Largest q for the brute-force sweep over all 3x3 matrices.
inline constexpr unsigned max_bruteforce_q = 5;
inline constexpr unsigned max_points_q = 101;

enum class CheckStatus
{
  Pass,
  Fail,
  NotRun
};

struct CheckResult
{
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  // Counterexample; always set when status is Fail.
  std::optional<std::string> witness;
};

struct Counts
{
  std::size_t points = 0;
  std::size_t pgl_size = 0;
  std::size_t so_size = 0;
};

struct VerificationReport
{
  FieldSpec field = FieldSpec::rational();
  Counts counts;
  std::vector<CheckResult> checks;
  std::chrono::duration<double> elapsed{0};

  // No check failed (NotRun entries do not count as failures).
  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

// JSON document; see docs/report-schema.md. `with_elapsed = false` drops the
// only nondeterministic field.
std::string to_json(const VerificationReport& report, bool with_elapsed = true);
std::string to_text(const VerificationReport& report);

// All q + 1 points: residues 0..q-1 then ∞. q must be an odd prime <= 101.
std::vector<ProjPoint> enumerate_points(unsigned q);

// All q^3 - q canonical matrices of PGL(2, q), sorted.
std::vector<MobiusMap> enumerate_pgl(unsigned q);

// SO(E) over F_q, sorted: brute force for q <= 5, reflection closure above.
std::vector<OrthMap> enumerate_so(unsigned q);
// Sweep over all q^9 matrices (q <= 5).
std::vector<OrthMap> enumerate_so_bruteforce(unsigned q);
// Products of two reflections over all nonisotropic cycles (q <= 13).
std::vector<OrthMap> enumerate_so_closure(unsigned q);

// Bijection of enumerate_points(q), given as image indices.
using Permutation = std::vector<int>;

// A pairwise-distinct 4-tuple (as point indices) whose squared classical
// cross ratio changes under `perm`, if any.
std::optional<std::array<int, 4>> find_cross_ratio_violation(unsigned q,
                                                             const Permutation& perm);

// Every bijection of the q + 1 points preserving the squared cross ratio, in
// lexicographic order. q in {3, 5}.
std::vector<Permutation> square_cross_ratio_preservers(unsigned q);

// The permutation of enumerate_points(q) induced by m.
Permutation as_permutation(unsigned q, const MobiusMap& m);

// Isotropy classification and the point <-> cycle round trip.
VerificationReport check_isotropy(unsigned q);
// Reflection action on the quadric equals the attached involution.
VerificationReport check_reflections(unsigned q);
VerificationReport check_cross_ratios(unsigned q);
VerificationReport check_isomorphism(unsigned q);
VerificationReport check_faithful(unsigned q);
VerificationReport check_decompositions(unsigned q);
VerificationReport check_stabilizer(unsigned q);
// The squared-cross-ratio preservers among all bijections are exactly the
// PGL maps. Throws DomainError unless q is 3 or 5.
VerificationReport check_preservers(unsigned q);

// Every check applicable to q; the preserver sweep is reported as NotRun for
// q > 5.
VerificationReport run_all(unsigned q);

}  // namespace quadline::verify
