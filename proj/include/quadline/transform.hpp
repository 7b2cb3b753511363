#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "quadline/cycle.hpp"

namespace quadline {

// 3x3 matrix acting on cycle coordinates (a, b, c). Any matrix can be held;
// is_orthogonal / is_special tell whether it belongs to O(E) / SO(E).
class OrthMap
{
public:
  using Entries = std::array<Scalar, 9>;

  // Row-major entries, all from one field (FieldMismatch otherwise).
  explicit OrthMap(Entries entries);

  static OrthMap identity(const FieldSpec& field);
  static OrthMap from_ints(const FieldSpec& field, const std::array<long, 9>& e);

  const Scalar& operator()(int row, int col) const { return m_[3 * row + col]; }
  const Entries& entries() const { return m_; }
  FieldSpec field() const { return m_[0].field(); }

  Scalar determinant() const;
  bool is_identity() const;

  // `m11,m12,m13;m21,m22,m23;m31,m32,m33`.
  std::string to_string() const;

  OrthMap operator-() const;
  // Composition: (S * T)(p) = S(T(p)).
  friend OrthMap operator*(const OrthMap& s, const OrthMap& t);
  friend bool operator==(const OrthMap&, const OrthMap&) = default;
  friend bool operator<(const OrthMap& lhs, const OrthMap& rhs);

private:
  Entries m_;
};

// Invertible 2x2 matrix up to a nonzero scalar, acting on the projective line
// by (x, y) -> (n11 x + n12 y, n21 x + n22 y). Stored with its first nonzero
// entry (row-major) equal to 1, so equality in PGL is matrix equality.
class MobiusMap
{
public:
  using Entries = std::array<Scalar, 4>;

  // Throws DomainError for a singular matrix.
  explicit MobiusMap(const Entries& entries);

  static MobiusMap identity(const FieldSpec& field);
  static MobiusMap from_ints(const FieldSpec& field, const std::array<long, 4>& e);

  const Scalar& operator()(int row, int col) const { return n_[2 * row + col]; }
  const Entries& entries() const { return n_; }
  FieldSpec field() const { return n_[0].field(); }

  bool is_identity() const;
  // Order 2 in PGL, i.e. trace zero.
  bool is_involution() const;
  MobiusMap inverse() const;

  // `n11,n12;n21,n22`.
  std::string to_string() const;

  // Composition: (M * N)(P) = M(N(P)).
  friend MobiusMap operator*(const MobiusMap& m, const MobiusMap& n);
  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
  friend bool operator<(const MobiusMap& lhs, const MobiusMap& rhs);

private:
  Entries n_;
};

// Gram matrix of the cycle pairing in the basis (X^2, X, 1).
OrthMap gram_matrix(const FieldSpec& field);

// M^T G M == G.
bool is_orthogonal(const OrthMap& t);
// Determinant +1.
bool is_special(const OrthMap& t);

// x -> x - (2<x,p>/<p,p>) p. Throws DomainError for isotropic p and
// NotACycle for the zero triple.
OrthMap reflection(const Cycle& p);

// Throws NotACycle for the zero triple.
Cycle apply_orth(const OrthMap& t, const Cycle& p);

// Action on the quadric, read through point_to_cycle / cycle_to_point.
ProjPoint act_on_point(const OrthMap& t, const ProjPoint& point);

// The involution of the line attached to a nonisotropic cycle:
// [[-b, -2c], [2a, b]], fixing exactly zero_points(p).
MobiusMap involution(const Cycle& p);

// Inverse of `involution`: the cycle attached to a trace-zero matrix, up to a
// scalar multiple. Throws DomainError unless m is an involution.
Cycle involution_cycle(const MobiusMap& m);

ProjPoint apply_mobius(const MobiusMap& m, const ProjPoint& point);

// The unique map sending 0, 1, ∞ to p0, p1, pinf. Throws DegenerateError when
// the three points are not pairwise distinct.
MobiusMap mobius_from_three_points(const ProjPoint& p0, const ProjPoint& p1,
                                   const ProjPoint& pinf);

// The projective transformation induced on the quadric. Accepts either
// determinant; throws DomainError for a non-orthogonal matrix.
OrthMap pgl_to_so(const MobiusMap& m);
MobiusMap so_to_pgl(const OrthMap& t);

// Pair (p, q) of nonisotropic cycles with reflection(p) * reflection(q) == T.
using CyclePair = std::pair<Cycle, Cycle>;

// nullopt means T is the identity. Throws DomainError unless T is in SO(E).
// Candidates r are tried in a fixed order (basis cycles, frame cycles, then
// every cycle over a finite field); over Q the fallback factors T through
// PGL. The returned pair is always verified.
std::optional<CyclePair> decompose_two_reflections(const OrthMap& t);

// Same, but only pairs accepted by `accept` are returned. Throws DomainError
// when the search space is exhausted without an accepted pair.
std::optional<CyclePair> decompose_two_reflections(
    const OrthMap& t, const std::function<bool(const CyclePair&)>& accept);

// Direct factorization in PGL without going through SO(E): a trace-zero N
// with N * M also trace zero gives M = N * (N * M). Returns the first pair
// accepted by `accept` (nullopt for the identity); throws DomainError when
// none is found.
std::optional<CyclePair> factor_into_involutions(
    const MobiusMap& m, const std::function<bool(const CyclePair&)>& accept);

// Pair (p, q) with involution(p) * involution(q) == M; nullopt for the
// identity. When M is itself an involution neither factor equals M.
std::optional<CyclePair> mobius_as_two_involutions(const MobiusMap& m);

// Matrix literals, row-major with ';' between rows and ',' between entries.
OrthMap parse_orth(const FieldSpec& field, std::string_view text);
MobiusMap parse_mobius(const FieldSpec& field, std::string_view text);

}  // namespace quadline
