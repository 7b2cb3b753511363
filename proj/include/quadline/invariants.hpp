#pragma once

#include "quadline/cycle.hpp"

namespace quadline {

// [x, y; z, t] = ((x - z)(y - t)) / ((x - t)(y - z)), evaluated with 2x2
// determinants of homogeneous coordinates so ∞ needs no special case.
// Throws DegenerateError unless the four points are pairwise distinct.
Scalar classical_cross_ratio(const ProjPoint& x, const ProjPoint& y,
                             const ProjPoint& z, const ProjPoint& t);

// <x, z><y, t> / (<x, t><y, z>) on the isotropic representatives of the four
// points. Equals the square of the classical cross ratio.
Scalar quadric_cross_ratio(const ProjPoint& x, const ProjPoint& y,
                           const ProjPoint& z, const ProjPoint& t);

// <x, p><y, p> / <x, y> on the canonical representatives point_to_cycle(x),
// point_to_cycle(y). Invariant under orthogonal maps fixing p up to sign.
// Throws DegenerateError for x == y and DomainError for isotropic p.
Scalar stabilizer_invariant(const ProjPoint& x, const ProjPoint& y,
                            const Cycle& p);

}  // namespace quadline
