#pragma once

// Factorization over the rationals: rational-root extraction plus a
// Kronecker-style interpolation search for factors of degree <= 8, with a
// mod-p distinct-degree prefilter that prunes impossible factor degrees.
// Desk-scale by design; oversized searches raise FactorizationError.

#include <utility>
#include <vector>

#include "wdlab/poly.hpp"

namespace wdlab {

struct IrreducibleFactor {
    RatPoly factor;  // monic, irreducible over the rationals
    int multiplicity;
};

/// p = lc(p) * prod factor^multiplicity. Factors sorted by (degree, coefficients).
/// Throws DomainError on the zero polynomial, FactorizationError past desk scale.
std::vector<IrreducibleFactor> factor_over_rationals(const RatPoly& p);

/// Deterministic Miller-Rabin (valid for n < 3.3e24, far beyond desk scale).
bool is_probable_prime(const Integer& n);

/// All positive divisors of |n|; throws FactorizationError when |n| resists
/// trial division or the divisor count exceeds `cap`.
std::vector<Integer> positive_divisors(Integer n, size_t cap = 4096);

}  // namespace wdlab
