#pragma once

// Exact rational linear algebra: fraction-free ranks/determinants, solving,
// characteristic and minimal polynomials. Everything here is division-exact;
// no tolerances appear anywhere.

#include <optional>

#include "wdlab/poly.hpp"
#include "wdlab/rational.hpp"

namespace wdlab {

/// Rank by fraction-free (Bareiss) elimination on the integer-cleared matrix.
Eigen::Index exact_rank(const RatMatrix& m);

/// Exact determinant (Bareiss with denominator bookkeeping).
Rational exact_det(const RatMatrix& m);

/// Solves A x = b exactly; empty optional when the system is inconsistent or
/// underdetermined with no canonical solution needed by callers.
std::optional<RatVector> exact_solve(const RatMatrix& a, const RatVector& b);

/// Exact inverse; throws ModelError if singular.
RatMatrix exact_inverse(const RatMatrix& m);

/// Coordinates of each column of `vecs` in the column space of `basis`.
/// Throws DomainError if some column is outside the span.
RatMatrix coordinates_in_span(const RatMatrix& basis, const RatMatrix& vecs);

/// det(xI - M) via the Faddeev-LeVerrier recurrence; monic, exact.
RatPoly charpoly(const RatMatrix& m);

/// Monic least-degree exact annihilator (Krylov + lcm over basis vectors).
RatPoly minpoly(const RatMatrix& m);

/// gcd(p, p') constant <=> no repeated roots over the algebraic closure.
bool is_squarefree(const RatPoly& p);

RatMatrix companion_matrix(const RatPoly& monic);
RatMatrix jordan_block(const Rational& lambda, Eigen::Index n);

}  // namespace wdlab
