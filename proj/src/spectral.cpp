#include "wdlab/spectral.hpp"

#include <cmath>

namespace wdlab {

namespace {

bool within(double value, double target, double tol) {
    return std::abs(value - target) <= tol * std::max(1.0, std::abs(target));
}

// Max Jordan block size among factors at maximal modulus, with the ambiguity
// window: exactly-equal within 1e-12, unresolvable in (1e-12, tol].
int max_block_at_top(const JordanProfile& profile, double tol) {
    constexpr double kExact = 1e-12;
    const double scale = std::max(1.0, profile.max_modulus);
    int best = 0;
    for (const auto& f : profile.factors) {
        const double diff = profile.max_modulus - f.max_root_modulus;
        if (diff <= kExact * scale) {
            for (int b : f.block_sizes) best = std::max(best, b);
        } else if (diff <= tol * scale) {
            // Name both the top factor and the borderline one.
            std::string top_name;
            for (const auto& g : profile.factors)
                if (profile.max_modulus - g.max_root_modulus <= kExact * scale) {
                    top_name = g.factor.to_string();
                    break;
                }
            throw AmbiguityError("factor moduli within tolerance but not exactly equal: " +
                                 f.factor.to_string() + " vs " + top_name);
        }
    }
    return best;
}

}  // namespace

GrowthRate lambda_j(const CorrespondenceAction& f, int j, const SpectralConfig& cfg) {
    GrowthRate g;
    const RatMatrix s = restriction_to_algebraic(f, j);
    g.spectral = spectral_radius(s, cfg.roots);
    const auto norms = iterate_norms_N(f, j, cfg.iterate_t);
    g.empirical = root_sequence(norms).back();
    g.gap = std::abs(g.spectral - g.empirical);
    return g;
}

GrowthRate chi_k(const CorrespondenceAction& f, int k, const SpectralConfig& cfg) {
    GrowthRate g;
    if (f.model->dim(k) == 0) return g;
    g.spectral = spectral_radius(f.mats[static_cast<size_t>(k)], cfg.roots);
    const auto norms = iterate_norms_H(f, k, cfg.iterate_t);
    g.empirical = root_sequence(norms).back();
    g.gap = std::abs(g.spectral - g.empirical);
    return g;
}

bool is_semisimple(const CorrespondenceAction& f, int k) {
    const RatMatrix& mk = f.mats[static_cast<size_t>(k)];
    if (mk.rows() == 0) return true;
    return is_squarefree(minpoly(mk));
}

BNumbers b_numbers(const CorrespondenceAction& f, int j, const SpectralConfig& cfg) {
    BNumbers b;
    const RatMatrix& full = f.mats[static_cast<size_t>(2 * j)];
    b.b_coh = max_block_at_top(jordan_profile(full, cfg.tol, cfg.roots), cfg.tol);
    b.b_alg = max_block_at_top(jordan_profile(restriction_to_algebraic(f, j), cfg.tol, cfg.roots),
                               cfg.tol);
    return b;
}

LogConcavityVerdict log_concavity(const CorrespondenceAction& f) {
    LogConcavityVerdict v;
    const int n = f.model->n;
    for (int j = 0; j <= n; ++j) v.degrees.push_back(deg_j(f, j));
    for (int k = 1; k + 1 <= n; ++k) {
        const Rational& prev = v.degrees[static_cast<size_t>(k - 1)];
        const Rational& cur = v.degrees[static_cast<size_t>(k)];
        const Rational& next = v.degrees[static_cast<size_t>(k + 1)];
        if (cur * cur < prev * next) {
            v.holds = false;
            v.witnesses.push_back({k, prev, cur, next});
        }
    }
    return v;
}

std::vector<DdcRow> ddc_check(const CorrespondenceAction& f, const SpectralConfig& cfg) {
    std::vector<DdcRow> rows;
    for (int j = 0; j <= f.model->n; ++j) {
        DdcRow r;
        r.j = j;
        r.chi = chi_k(f, 2 * j, cfg).spectral;
        r.lambda = lambda_j(f, j, cfg).spectral;
        r.gap = std::abs(r.chi - r.lambda);
        r.pass = within(r.chi, r.lambda, cfg.tol);
        rows.push_back(r);
    }
    return rows;
}

EntropyVerdict entropy_comparison(const CorrespondenceAction& f, const SpectralConfig& cfg) {
    EntropyVerdict v;
    for (int k = 0; k <= 2 * f.model->n; ++k)
        v.max_chi = std::max(v.max_chi, chi_k(f, k, cfg).spectral);
    for (int j = 0; j <= f.model->n; ++j)
        v.max_lambda = std::max(v.max_lambda, lambda_j(f, j, cfg).spectral);
    v.gap = std::abs(v.max_chi - v.max_lambda);
    v.pass = within(v.max_chi, v.max_lambda, cfg.tol);
    return v;
}

NormComparison norm_comparison_constant(const CorrespondenceAction& f) {
    const VarietyModel& m = *f.model;
    NormComparison out;
    std::vector<Rational> n_norms;
    for (int j = 0; j <= m.n; ++j) {
        n_norms.push_back(norm_N(f, j));
        if (n_norms.back() == 0)
            throw DomainError("degenerate action: norm_N vanishes at level " + std::to_string(j));
    }
    std::optional<Rational> best_even;
    double best_odd = 0.0;
    for (int k = 0; k <= 2 * m.n; ++k) {
        NormComparisonRow row;
        row.k = k;
        row.norm_h = norm_H(f, k);
        if (k % 2 == 0) {
            const Rational ratio = row.norm_h / n_norms[static_cast<size_t>(k / 2)];
            row.exact = ratio;
            row.ratio = to_double(ratio);
            if (!best_even || ratio > *best_even) best_even = ratio;
        } else {
            row.odd = true;
            const int j = (k - 1) / 2;
            if (row.norm_h == 0) {
                row.ratio = 0.0;
            } else {
                row.ratio = std::exp(rat_log(row.norm_h) -
                                     0.5 * (rat_log(n_norms[static_cast<size_t>(j)]) +
                                            rat_log(n_norms[static_cast<size_t>(j + 1)])));
            }
            best_odd = std::max(best_odd, row.ratio);
        }
        out.rows.push_back(std::move(row));
    }
    const double even_val = best_even ? to_double(*best_even) : 0.0;
    if (best_even && even_val >= best_odd) {
        out.c = even_val;
        out.c_exact = best_even;
    } else {
        out.c = best_odd;
    }
    return out;
}

SpectralReport spectral_report(const CorrespondenceAction& f, const SpectralConfig& cfg) {
    SpectralReport rep;
    rep.config = cfg;
    for (int k = 0; k <= 2 * f.model->n; ++k)
        rep.degrees.push_back({k, chi_k(f, k, cfg), is_semisimple(f, k)});
    for (int j = 0; j <= f.model->n; ++j) {
        LevelReport lr;
        lr.j = j;
        lr.lambda = lambda_j(f, j, cfg);
        try {
            lr.b = b_numbers(f, j, cfg);
            lr.prop1_violation = lr.b->b_coh != lr.b->b_alg;
        } catch (const AmbiguityError& e) {
            lr.b_error = e.what();
        }
        rep.levels.push_back(std::move(lr));
    }
    rep.ddc = ddc_check(f, cfg);
    rep.log_concave = log_concavity(f);
    rep.entropy = entropy_comparison(f, cfg);
    try {
        rep.norm_comparison = norm_comparison_constant(f);
    } catch (const DomainError& e) {
        rep.norm_comparison_error = e.what();
    }
    rep.norms = norm_table(f);
    return rep;
}

}  // namespace wdlab
