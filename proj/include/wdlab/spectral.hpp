#pragma once

// Dynamical degrees, growth rates, semisimplicity and Jordan-block
// diagnostics, log-concavity, and the degree/entropy/norm comparison checks.

#include "wdlab/action.hpp"
#include "wdlab/roots.hpp"

namespace wdlab {

struct SpectralConfig {
    double tol = 1e-9;   // verdict tolerance (scaled by max(1, target))
    int iterate_t = 24;  // horizon for empirical iterate-norm roots
    RootConfig roots{};
};

/// Spectral quantity from the exact charpoly plus the empirical iterate root;
/// the gap between the two is a sanity diagnostic, verdicts use `spectral`.
struct GrowthRate {
    double spectral = 0.0;
    double empirical = 0.0;
    double gap = 0.0;
};

/// Spectral radius of M_{2j} restricted to A^j, with the iterate-root cross-check.
GrowthRate lambda_j(const CorrespondenceAction& f, int j, const SpectralConfig& cfg = {});

/// Spectral radius of M_k, with the iterate-root cross-check.
GrowthRate chi_k(const CorrespondenceAction& f, int k, const SpectralConfig& cfg = {});

/// Exact: squarefree minimal polynomial of M_k. No tolerance anywhere.
bool is_semisimple(const CorrespondenceAction& f, int k);

struct BNumbers {
    int b_coh = 0;  // max Jordan block at max-modulus eigenvalues of M_{2j}
    int b_alg = 0;  // same for the restriction to A^j
};

/// Throws AmbiguityError when two factors' max moduli differ by more than the
/// exact-equality width (1e-12) but less than `cfg.tol` (cannot be resolved).
BNumbers b_numbers(const CorrespondenceAction& f, int j, const SpectralConfig& cfg = {});

struct LogConcavityWitness {
    int k;
    Rational a_prev, a_k, a_next;
};

struct LogConcavityVerdict {
    bool holds = true;
    std::vector<Rational> degrees;  // a_j = deg_j(f)
    std::vector<LogConcavityWitness> witnesses;
};

/// Exact check of a_k^2 >= a_{k-1} a_{k+1} for the deg_j sequence.
LogConcavityVerdict log_concavity(const CorrespondenceAction& f);

struct DdcRow {
    int j;
    double chi, lambda, gap;
    bool pass;
};
std::vector<DdcRow> ddc_check(const CorrespondenceAction& f, const SpectralConfig& cfg = {});

struct EntropyVerdict {
    double max_chi = 0.0, max_lambda = 0.0, gap = 0.0;
    bool pass = false;
};
EntropyVerdict entropy_comparison(const CorrespondenceAction& f, const SpectralConfig& cfg = {});

struct NormComparisonRow {
    int k = 0;
    bool odd = false;
    Rational norm_h;                // ||f^*|_{H^k}||, exact
    double ratio = 0.0;             // against the (geometric mean of) algebraic norms
    std::optional<Rational> exact;  // present for even degrees
};

struct NormComparison {
    std::vector<NormComparisonRow> rows;
    double c = 0.0;                    // smallest constant over all degrees
    std::optional<Rational> c_exact;   // set when an even degree attains the max
};

/// Throws DomainError when some norm_N(f, j) vanishes (degenerate action).
NormComparison norm_comparison_constant(const CorrespondenceAction& f);

struct LevelReport {
    int j;
    GrowthRate lambda;
    std::optional<BNumbers> b;      // empty when ambiguous
    std::string b_error;            // ambiguity message, if any
    bool prop1_violation = false;   // b_coh != b_alg
};

struct DegreeReport {
    int k;
    GrowthRate chi;
    bool semisimple;
};

struct SpectralReport {
    std::vector<DegreeReport> degrees;
    std::vector<LevelReport> levels;
    std::vector<DdcRow> ddc;
    LogConcavityVerdict log_concave;
    EntropyVerdict entropy;
    NormComparison norm_comparison;
    std::string norm_comparison_error;  // degenerate-action note, if any
    NormTable norms;
    SpectralConfig config;
};

SpectralReport spectral_report(const CorrespondenceAction& f, const SpectralConfig& cfg = {});

}  // namespace wdlab
