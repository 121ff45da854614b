#pragma once

// Numeric layer over the exact one: polynomial roots by simultaneous
// (Durand-Kerner) iteration on exact squarefree parts, eigenvalue multisets,
// spectral radii, and exact Jordan block profiles with numeric moduli attached.

#include <complex>
#include <vector>

#include "wdlab/exact.hpp"
#include "wdlab/factor.hpp"

namespace wdlab {

struct RootConfig {
    double tol = 1e-10;    // relative step target for the simultaneous iteration
    int max_iters = 1000;  // per squarefree part
};

struct Eigenvalues {
    std::vector<Complex> values;  // with algebraic multiplicity
    double residual = 0.0;        // max relative residual over the computed roots
};

/// Roots of a nonzero polynomial, with multiplicity, via exact squarefree
/// splitting + Durand-Kerner on each part (deterministic perturbed-circle
/// start) + Newton polish. Throws ConvergenceError carrying the best residual.
Eigenvalues polynomial_roots(const RatPoly& p, const RootConfig& cfg = {});

/// Eigenvalue multiset of a square rational matrix through its exact
/// characteristic polynomial.
Eigenvalues eigenvalues_approx(const RatMatrix& m, const RootConfig& cfg = {});

/// Eigenvalue multiset of a square complex matrix (Schur-based).
Eigenvalues eigenvalues_approx(const CplxMatrix& m, const RootConfig& cfg = {});

double spectral_radius(const RatMatrix& m, const RootConfig& cfg = {});
double spectral_radius(const CplxMatrix& m, const RootConfig& cfg = {});

struct JordanFactorBlocks {
    RatPoly factor;               // irreducible over the rationals
    std::vector<int> block_sizes; // descending, one entry per rational Jordan block
    double max_root_modulus;      // largest |root| of the factor
};

struct JordanProfile {
    std::vector<JordanFactorBlocks> factors;
    Eigen::Index dimension = 0;
    double max_modulus = 0.0;
    int max_block_at_max_modulus = 0;
    bool semisimple() const {
        for (const auto& f : factors)
            for (int b : f.block_sizes)
                if (b > 1) return false;
        return true;
    }
};

/// Block sizes are exact (rank sequences of factor(M)^k); only the modulus
/// attachment is numeric. `tol` is the at-max-modulus clustering width.
JordanProfile jordan_profile(const RatMatrix& m, double tol = 1e-9, const RootConfig& cfg = {});

}  // namespace wdlab
