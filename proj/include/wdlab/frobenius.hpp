#pragma once

// Frobenius-side tooling: Weil RH checks, graded scaling maps, fractional
// powers of semisimple actions, the scaled norm-bound sweeps, the polarized
// inequality numerics, and the spectral-bound auditor with its two readings
// of the conjugation A^tau.

#include "wdlab/models.hpp"
#include "wdlab/roots.hpp"

namespace wdlab {

/// The constructor-defined Frobenius of a bundle; UnsupportedModelError if absent.
const CorrespondenceAction& frobenius_action(const ModelBundle& b);

struct WeilRow {
    int k = 0;
    std::vector<double> moduli;
    double target = 0.0;  // q^{k/2}
    double max_deviation = 0.0;
    bool pass = true;
};

/// Every eigenvalue modulus of M_k must equal q^{k/2} within tol*max(1, q^{k/2}).
std::vector<WeilRow> weil_rh_check(const CorrespondenceAction& f, long long q, double tol,
                                   const RootConfig& roots = {});

/// Degreewise scalar r^j on H^j; DomainError for r <= 0.
CorrespondenceAction gamma_r(ModelPtr model, const Rational& r);

struct FractionalPower {
    int degree = 0;
    double s = 0.0;
    CplxMatrix power;             // U D^s U^{-1}, principal branch
    CplxVector base_eigenvalues;  // D of the base action
    double condition_number = 0.0;
    double integer_check_gap = 0.0;  // ||numeric - exact|| when s is an integer
};

/// Requires exact semisimplicity at degree k (SemisimplicityError otherwise)
/// and an eigenvector basis with condition number below `cond_limit`
/// (ConditioningError otherwise). At integer s the result is checked against
/// the exact matrix power within tol * condition number.
FractionalPower fractional_power(const CorrespondenceAction& f, int k, double s, double tol = 1e-9,
                                 double cond_limit = 1e12);

/// 25 approximately log-spaced dyadic rationals spanning [q^-3, q^3].
std::vector<Rational> default_r_grid(long long q, int points = 25);

struct Eq2Row {
    Rational r;
    std::vector<Rational> ratio_per_k;  // r^k ||f*|H^k|| / max_j r^{2j} ||f*|N^j||
    Rational max_ratio;
};

struct Eq2Sweep {
    std::vector<Eq2Row> rows;
    Rational c_global;
    bool transpose_identity_exact = false;  // ratio(f,k,r) == ratio(f_tau,2n-k,1/r), all points
};

/// Exact at every grid point; DomainError when some algebraic norm vanishes.
Eq2Sweep eq2_sweep(const CorrespondenceAction& f, const std::vector<Rational>& grid);

enum class ConjugationMode {
    entrywise,            // A^tau = entrywise complex conjugate
    conjugate_transpose,  // A^tau = conjugate transpose
};

std::string to_string(ConjugationMode mode);

struct Lemma1Audit {
    std::string input;  // human-readable description
    ConjugationMode mode = ConjugationMode::conjugate_transpose;
    CplxMatrix b;        // the computed product A A^tau
    double sp_a = 0.0;
    double sp_b = 0.0;   // sp(A A^tau)
    double bound = 0.0;  // (1 + sp A)^2
    bool pass = false;   // sp_b <= bound + tol
    // Jordan-parameter inputs also compare B against the five reference
    // formulas (tridiagonal, 1+|l|^2 diagonal, |l|^2 corner, conj(l) super-,
    // l subdiagonal).
    bool has_entry_comparison = false;
    bool entries_match_exactly = false;
    double max_entry_deviation = 0.0;
    std::vector<std::string> mismatched_formulas;
};

Lemma1Audit lemma1_audit(const CplxMatrix& a, ConjugationMode mode, double tol = 1e-9);
Lemma1Audit lemma1_audit_jordan(Complex lambda, int size, ConjugationMode mode, double tol = 1e-9);

struct TraceRadiusRow {
    int n = 0;
    Complex trace;
    double root = 0.0;  // |Tr((A A^tau)^n)|^{1/n}
    double gap = 0.0;   // |root - sp|
};

struct TraceRadiusReport {
    std::vector<TraceRadiusRow> rows;
    double sp = 0.0;
    double final_gap = 0.0;
    double limsup_estimate = 0.0;  // max root over the tail half
    int direction_changes = 0;     // oscillation indicator
    bool converged = false;        // final_gap <= 1e-3
};

TraceRadiusReport trace_radius_identity(const CplxMatrix& a, ConjugationMode mode, int T);

struct Theorem1Point {
    double s = 0.0;
    int t = 0;
    int k = 0;
    // per conjugation mode: sp(A^{-s} (A^{-s})^tau)^{-1/2}, the Lemma-1 verdict
    // for A^{-s}, and the q^{sk/2}/2 lower-bound verdict where the lemma passed
    double sp_factor[2] = {0.0, 0.0};
    bool lemma1_pass[2] = {false, false};
    bool lower_bound_ok[2] = {true, true};
    double lhs[2] = {0.0, 0.0};  // sp_factor * ||(f^*)^t|_{H^k}||
    double rhs = 0.0;            // max_j q^{sj} a^{tj}
};

struct Theorem1Report {
    std::vector<Theorem1Point> points;
    std::vector<double> c_per_t[2];  // per-t slice constants, indexed by mode
    double c_global[2] = {0.0, 0.0};
};

/// f must carry a polarization; F is the Frobenius-type action (semisimple at
/// the degrees visited when fractional s appear). s values must be <= 0.
Theorem1Report theorem1_inequality(const CorrespondenceAction& f, const CorrespondenceAction& F,
                                   long long q, const std::vector<double>& s_list, int t_max,
                                   double tol = 1e-9);

}  // namespace wdlab
