#pragma once

#include <stdexcept>
#include <string>

namespace wdlab {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape mismatch (non-square input, incompatible sizes, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// Argument outside the operation's domain (zero polynomial, r <= 0, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Iterative root finding failed to converge; carries the best residual seen.
struct ConvergenceError : Error {
    double residual;
    ConvergenceError(const std::string& msg, double res) : Error(msg), residual(res) {}
};

/// Desk-scale factorization limits exceeded (Kronecker search too large).
struct FactorizationError : Error {
    using Error::Error;
};

/// A VarietyModel invariant is violated (degenerate pairing, bad dims, ...).
struct ModelError : Error {
    using Error::Error;
};

/// Cup product would exceed the top degree.
struct DegreeError : Error {
    using Error::Error;
};

/// Actions composed over different models.
struct CompositionError : Error {
    using Error::Error;
};

/// CorrespondenceAction invariant violated at construction.
struct ActionError : Error {
    using Error::Error;
};

/// Model lacks the data a constructor needs (no Frobenius, wrong shape).
struct UnsupportedModelError : Error {
    using Error::Error;
};

/// Exact semisimplicity precondition failed (minimal polynomial not squarefree).
struct SemisimplicityError : Error {
    using Error::Error;
};

/// Numeric eigenvector basis too ill-conditioned to trust.
struct ConditioningError : Error {
    using Error::Error;
};

/// Two irreducible factors have numerically indistinguishable max moduli.
struct AmbiguityError : Error {
    using Error::Error;
};

/// Invalid construction parameters (Weil bound, singular curve, mixed q).
struct SpecError : Error {
    using Error::Error;
};

/// Bad input file (JSON syntax or schema violation); carries context.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace wdlab
