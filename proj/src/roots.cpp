#include "wdlab/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wdlab {

namespace {

// Durand-Kerner on a monic squarefree polynomial given as double coefficients.
// Returns the roots; `residual` receives max |p(z)| / sum|coeffs|.
std::vector<Complex> durand_kerner(const std::vector<double>& monic, const RootConfig& cfg,
                                   double* residual) {
    const int n = static_cast<int>(monic.size()) - 1;
    auto eval = [&](Complex z) {
        Complex acc(0, 0);
        for (int i = n; i >= 0; --i) acc = acc * z + monic[i];
        return acc;
    };
    auto eval_deriv = [&](Complex z) {
        Complex acc(0, 0);
        for (int i = n; i >= 1; --i) acc = acc * z + monic[i] * static_cast<double>(i);
        return acc;
    };
    double scale = 0.0;
    for (double c : monic) scale += std::abs(c);

    if (n == 1) {
        if (residual) *residual = 0.0;
        return {Complex(-monic[0], 0.0)};
    }

    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(monic[i]));
    radius = 1.0 + radius;  // Cauchy bound

    // Deterministic start: points on a circle, rotated off the real axis.
    std::vector<Complex> z(n);
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n + 0.4;
        z[i] = radius * Complex(std::cos(theta), std::sin(theta));
    }

    double best_residual = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int iter = 0; iter < cfg.max_iters && !converged; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            const Complex delta = eval(z[i]) / denom;
            z[i] -= delta;
            max_step = std::max(max_step, std::abs(delta) / std::max(1.0, std::abs(z[i])));
        }
        double res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::abs(eval(z[i])) / scale);
        best_residual = std::min(best_residual, res);
        converged = max_step <= cfg.tol;
    }
    if (!converged)
        throw ConvergenceError("Durand-Kerner did not converge within " +
                                   std::to_string(cfg.max_iters) + " iterations",
                               best_residual);

    // Newton polish (roots are simple: squarefree input).
    for (int i = 0; i < n; ++i) {
        for (int step = 0; step < 3; ++step) {
            const Complex d = eval_deriv(z[i]);
            if (std::abs(d) == 0.0) break;
            z[i] -= eval(z[i]) / d;
        }
    }
    double res = 0.0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::abs(eval(z[i])) / scale);
    if (residual) *residual = res;
    return z;
}

std::vector<double> monic_double_coeffs(const RatPoly& p) {
    const RatPoly m = p.monic();
    std::vector<double> out(m.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = to_double(m.coeffs()[i]);
    return out;
}

}  // namespace

Eigenvalues polynomial_roots(const RatPoly& p, const RootConfig& cfg) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    Eigenvalues out;
    for (const auto& part : squarefree_decomposition(p)) {
        double res = 0.0;
        const auto roots = durand_kerner(monic_double_coeffs(part.factor), cfg, &res);
        out.residual = std::max(out.residual, res);
        for (const auto& r : roots)
            for (int k = 0; k < part.multiplicity; ++k) out.values.push_back(r);
    }
    return out;
}

Eigenvalues eigenvalues_approx(const RatMatrix& m, const RootConfig& cfg) {
    if (m.rows() != m.cols()) throw DimensionError("eigenvalues of a non-square matrix");
    if (m.rows() == 0) return {};
    return polynomial_roots(charpoly(m), cfg);
}

Eigenvalues eigenvalues_approx(const CplxMatrix& m, const RootConfig&) {
    if (m.rows() != m.cols()) throw DimensionError("eigenvalues of a non-square matrix");
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<CplxMatrix> es(m, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("complex eigensolver failed to converge",
                               std::numeric_limits<double>::infinity());
    Eigenvalues out;
    const double norm_scale = std::max(1.0, max_abs(m));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const Complex lambda = es.eigenvalues()(i);
        out.values.push_back(lambda);
        const CplxVector v = es.eigenvectors().col(i);
        const double r = (m * v - lambda * v).norm() / (norm_scale * std::max(1e-300, v.norm()));
        out.residual = std::max(out.residual, r);
    }
    return out;
}

double spectral_radius(const RatMatrix& m, const RootConfig& cfg) {
    double r = 0.0;
    for (const auto& z : eigenvalues_approx(m, cfg).values) r = std::max(r, std::abs(z));
    return r;
}

double spectral_radius(const CplxMatrix& m, const RootConfig& cfg) {
    double r = 0.0;
    for (const auto& z : eigenvalues_approx(m, cfg).values) r = std::max(r, std::abs(z));
    return r;
}

JordanProfile jordan_profile(const RatMatrix& m, double tol, const RootConfig& cfg) {
    if (m.rows() != m.cols()) throw DimensionError("jordan_profile of a non-square matrix");
    JordanProfile profile;
    profile.dimension = m.rows();
    if (m.rows() == 0) return profile;

    const auto irreducibles = factor_over_rationals(charpoly(m));
    Eigen::Index accounted = 0;
    for (const auto& [factor, multiplicity] : irreducibles) {
        JordanFactorBlocks fb;
        fb.factor = factor;
        const int deg = factor.degree();
        if (multiplicity == 1) {
            fb.block_sizes = {1};
        } else {
            // #blocks of size >= k equals (rank f(M)^{k-1} - rank f(M)^k) / deg f.
            const RatMatrix base = factor(m);
            std::vector<int> at_least;  // index k-1 -> #blocks >= k
            Eigen::Index prev_rank = m.rows();
            RatMatrix pw = base;
            for (int k = 1; k <= multiplicity; ++k) {
                const Eigen::Index rk = exact_rank(pw);
                const Eigen::Index defect = prev_rank - rk;
                if (defect % deg != 0)
                    throw Error("jordan_profile: rank defect not divisible by factor degree");
                const int count = static_cast<int>(defect / deg);
                if (count == 0) break;
                at_least.push_back(count);
                prev_rank = rk;
                if (k < multiplicity) pw = (pw * base).eval();
            }
            for (size_t k = 0; k < at_least.size(); ++k) {
                const int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
                for (int b = 0; b < exactly; ++b)
                    fb.block_sizes.push_back(static_cast<int>(k) + 1);
            }
            std::sort(fb.block_sizes.rbegin(), fb.block_sizes.rend());
        }
        double mod = 0.0;
        for (const auto& z : polynomial_roots(factor, cfg).values) mod = std::max(mod, std::abs(z));
        fb.max_root_modulus = mod;
        for (int b : fb.block_sizes) accounted += static_cast<Eigen::Index>(b) * deg;
        profile.factors.push_back(std::move(fb));
    }
    if (accounted != m.rows())
        throw Error("jordan_profile: block sizes do not account for the full dimension");

    for (const auto& f : profile.factors) profile.max_modulus = std::max(profile.max_modulus, f.max_root_modulus);
    for (const auto& f : profile.factors) {
        if (std::abs(f.max_root_modulus - profile.max_modulus) <=
            tol * std::max(1.0, profile.max_modulus)) {
            for (int b : f.block_sizes)
                profile.max_block_at_max_modulus = std::max(profile.max_block_at_max_modulus, b);
        }
    }
    return profile;
}

}  // namespace wdlab
