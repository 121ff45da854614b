#include "wdlab/frobenius.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>

#include "wdlab/spectral.hpp"

namespace wdlab {

namespace {

// Deterministic entry order; avoids blocked-product reassociation.
CplxMatrix mul_plain(const CplxMatrix& a, const CplxMatrix& b) {
    CplxMatrix out = CplxMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            Complex acc(0, 0);
            for (Eigen::Index t = 0; t < a.cols(); ++t) acc += a(i, t) * b(t, j);
            out(i, j) = acc;
        }
    return out;
}

CplxMatrix conjugated(const CplxMatrix& a, ConjugationMode mode) {
    if (mode == ConjugationMode::entrywise) return a.conjugate();
    return a.adjoint();
}

bool nearly_integer(double s, double eps = 1e-12) { return std::abs(s - std::round(s)) <= eps; }

}  // namespace

const CorrespondenceAction& frobenius_action(const ModelBundle& b) {
    const CorrespondenceAction* f = b.find("frobenius");
    if (!f) throw UnsupportedModelError("model carries no Frobenius action");
    return *f;
}

std::vector<WeilRow> weil_rh_check(const CorrespondenceAction& f, long long q, double tol,
                                   const RootConfig& roots) {
    std::vector<WeilRow> rows;
    for (int k = 0; k <= 2 * f.model->n; ++k) {
        WeilRow row;
        row.k = k;
        row.target = std::pow(static_cast<double>(q), k / 2.0);
        if (f.model->dim(k) > 0) {
            for (const auto& z : eigenvalues_approx(f.mats[static_cast<size_t>(k)], roots).values) {
                row.moduli.push_back(std::abs(z));
                row.max_deviation = std::max(row.max_deviation, std::abs(row.moduli.back() - row.target));
            }
            row.pass = row.max_deviation <= tol * std::max(1.0, row.target);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CorrespondenceAction gamma_r(ModelPtr model, const Rational& r) {
    if (r <= 0) throw DomainError("gamma_r needs r > 0");
    std::vector<RatMatrix> mats;
    Rational rk(1);
    for (int k = 0; k <= 2 * model->n; ++k) {
        mats.push_back(rk * rat_identity(model->dim(k)));
        rk *= r;
    }
    std::optional<Rational> pol;
    if (r * r > 1) pol = r * r;
    return make_action(std::move(model), std::move(mats), true, std::move(pol));
}

FractionalPower fractional_power(const CorrespondenceAction& f, int k, double s, double tol,
                                 double cond_limit) {
    if (!is_semisimple(f, k))
        throw SemisimplicityError("action is not semisimple at degree " + std::to_string(k) +
                                  "; fractional powers are only defined for semisimple actions");
    const RatMatrix& mk = f.mats[static_cast<size_t>(k)];
    FractionalPower out;
    out.degree = k;
    out.s = s;
    if (mk.rows() == 0) {
        out.power = CplxMatrix(0, 0);
        out.condition_number = 1.0;
        return out;
    }
    Eigen::ComplexEigenSolver<CplxMatrix> es(to_complex(mk), true);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("eigendecomposition failed", std::numeric_limits<double>::infinity());
    const CplxMatrix u = es.eigenvectors();
    Eigen::JacobiSVD<CplxMatrix> svd(u);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    out.condition_number = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(out.condition_number < cond_limit))
        throw ConditioningError("eigenvector basis condition number " +
                                std::to_string(out.condition_number) + " exceeds the limit");
    out.base_eigenvalues = es.eigenvalues();

    CplxVector ds(out.base_eigenvalues.size());
    for (Eigen::Index i = 0; i < ds.size(); ++i) {
        const Complex lambda = out.base_eigenvalues(i);
        if (std::abs(lambda) == 0.0) {
            if (s > 0) ds(i) = Complex(0, 0);
            else if (s == 0) ds(i) = Complex(1, 0);
            else throw DomainError("negative power of a singular action");
        } else {
            ds(i) = std::exp(s * std::log(lambda));  // principal branch
        }
    }
    out.power = u * ds.asDiagonal() * u.inverse();

    if (nearly_integer(s)) {
        const long long m = std::llround(s);
        RatMatrix exact;
        if (m >= 0) exact = rat_pow(mk, static_cast<unsigned>(m));
        else exact = rat_pow(exact_inverse(mk), static_cast<unsigned>(-m));
        out.integer_check_gap = max_abs(out.power - to_complex(exact));
        const double scale = std::max(1.0, max_abs(to_complex(exact)));
        if (out.integer_check_gap > tol * out.condition_number * scale)
            throw ConditioningError("fractional power at integer s drifts from the exact power by " +
                                    std::to_string(out.integer_check_gap));
    }
    return out;
}

std::vector<Rational> default_r_grid(long long q, int points) {
    if (q < 2) throw DomainError("r-grid needs q >= 2");
    if (points < 2) throw DomainError("r-grid needs at least two points");
    std::vector<Rational> grid;
    const double lo = -3.0 * std::log(static_cast<double>(q));
    const double hi = 3.0 * std::log(static_cast<double>(q));
    for (int i = 0; i < points; ++i) {
        const double x = std::exp(lo + (hi - lo) * i / (points - 1));
        grid.push_back(rat_from_double(x));  // dyadic, hence exact from here on
    }
    return grid;
}

namespace {

Rational rational_pow(const Rational& r, int e) {
    Rational acc(1);
    Rational base = e >= 0 ? r : Rational(1) / r;
    for (int i = 0; i < std::abs(e); ++i) acc *= base;
    return acc;
}

std::vector<Rational> eq2_ratios_at(const std::vector<Rational>& h_norms,
                                    const std::vector<Rational>& n_norms, const Rational& r) {
    const int top = static_cast<int>(h_norms.size()) - 1;
    const int n = static_cast<int>(n_norms.size()) - 1;
    Rational denom(0);
    for (int j = 0; j <= n; ++j) {
        const Rational term = rational_pow(r, 2 * j) * n_norms[static_cast<size_t>(j)];
        if (term > denom) denom = term;
    }
    std::vector<Rational> ratios;
    for (int k = 0; k <= top; ++k)
        ratios.push_back(rational_pow(r, k) * h_norms[static_cast<size_t>(k)] / denom);
    return ratios;
}

}  // namespace

Eq2Sweep eq2_sweep(const CorrespondenceAction& f, const std::vector<Rational>& grid) {
    const VarietyModel& m = *f.model;
    std::vector<Rational> h_norms, n_norms;
    for (int k = 0; k <= 2 * m.n; ++k) h_norms.push_back(norm_H(f, k));
    for (int j = 0; j <= m.n; ++j) {
        n_norms.push_back(norm_N(f, j));
        if (n_norms.back() == 0)
            throw DomainError("degenerate action: norm_N vanishes at level " + std::to_string(j));
    }
    const CorrespondenceAction ft = transpose(f);
    std::vector<Rational> ht_norms, nt_norms;
    for (int k = 0; k <= 2 * m.n; ++k) ht_norms.push_back(norm_H(ft, k));
    for (int j = 0; j <= m.n; ++j) nt_norms.push_back(norm_N(ft, j));

    Eq2Sweep sweep;
    sweep.c_global = 0;
    sweep.transpose_identity_exact = true;
    for (const auto& r : grid) {
        Eq2Row row;
        row.r = r;
        row.ratio_per_k = eq2_ratios_at(h_norms, n_norms, r);
        row.max_ratio = 0;
        for (const auto& v : row.ratio_per_k)
            if (v > row.max_ratio) row.max_ratio = v;
        if (row.max_ratio > sweep.c_global) sweep.c_global = row.max_ratio;

        // The r > 1 reduction: ratio(f, k, r) = ratio(f_tau, 2n-k, 1/r), exactly.
        const auto mirror = eq2_ratios_at(ht_norms, nt_norms, Rational(1) / r);
        for (int k = 0; k <= 2 * m.n; ++k)
            if (row.ratio_per_k[static_cast<size_t>(k)] !=
                mirror[static_cast<size_t>(2 * m.n - k)])
                sweep.transpose_identity_exact = false;
        sweep.rows.push_back(std::move(row));
    }
    return sweep;
}

std::string to_string(ConjugationMode mode) {
    return mode == ConjugationMode::entrywise ? "entrywise-conjugate" : "conjugate-transpose";
}

namespace {

Lemma1Audit audit_core(const CplxMatrix& a, ConjugationMode mode, double tol, std::string name) {
    Lemma1Audit audit;
    audit.input = std::move(name);
    audit.mode = mode;
    audit.b = mul_plain(a, conjugated(a, mode));
    audit.sp_a = spectral_radius(a);
    audit.sp_b = spectral_radius(audit.b);
    audit.bound = (1.0 + audit.sp_a) * (1.0 + audit.sp_a);
    audit.pass = audit.sp_b <= audit.bound + tol;
    return audit;
}

}  // namespace

Lemma1Audit lemma1_audit(const CplxMatrix& a, ConjugationMode mode, double tol) {
    if (a.rows() != a.cols()) throw DimensionError("lemma1_audit: matrix must be square");
    std::ostringstream os;
    os << a.rows() << "x" << a.cols() << " matrix";
    return audit_core(a, mode, tol, os.str());
}

Lemma1Audit lemma1_audit_jordan(Complex lambda, int size, ConjugationMode mode, double tol) {
    if (size < 1) throw DimensionError("lemma1_audit: Jordan size must be >= 1");
    CplxMatrix j = CplxMatrix::Zero(size, size);
    for (int i = 0; i < size; ++i) {
        j(i, i) = lambda;
        if (i + 1 < size) j(i, i + 1) = Complex(1, 0);
    }
    std::ostringstream os;
    os << "J(lambda=" << lambda.real() << (lambda.imag() < 0 ? "-" : "+")
       << std::abs(lambda.imag()) << "i, N=" << size << ")";
    Lemma1Audit audit = audit_core(j, mode, tol, os.str());

    // Compare B against the five reference formulas, built from the same
    // primitive operations the product uses.
    const CplxMatrix& b = audit.b;
    const double mod2 = lambda.real() * lambda.real() + lambda.imag() * lambda.imag();
    audit.has_entry_comparison = true;
    audit.entries_match_exactly = true;
    auto check = [&](bool ok, double dev, const char* which) {
        audit.max_entry_deviation = std::max(audit.max_entry_deviation, dev);
        if (!ok) {
            audit.entries_match_exactly = false;
            for (const auto& s : audit.mismatched_formulas)
                if (s == which) return;
            audit.mismatched_formulas.push_back(which);
        }
    };
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) {
            const Complex got = b(r, c);
            if (std::abs(r - c) > 1) {
                check(got == Complex(0, 0), std::abs(got), "b_ij = 0 for |i-j| > 1");
            } else if (r == c) {
                const Complex want(r == size - 1 ? mod2 : 1.0 + mod2, 0.0);
                check(got == want, std::abs(got - want),
                      r == size - 1 ? "b_NN = |lambda|^2" : "b_ii = 1 + |lambda|^2");
            } else if (c == r + 1) {
                const Complex want = std::conj(lambda);
                check(got == want, std::abs(got - want), "b_{i,i+1} = conj(lambda)");
            } else {
                check(got == lambda, std::abs(got - lambda), "b_{i+1,i} = lambda");
            }
        }
    return audit;
}

TraceRadiusReport trace_radius_identity(const CplxMatrix& a, ConjugationMode mode, int T) {
    if (a.rows() != a.cols()) throw DimensionError("trace_radius_identity: matrix must be square");
    if (T < 1) throw DomainError("trace_radius_identity: T must be >= 1");
    const CplxMatrix b = mul_plain(a, conjugated(a, mode));
    TraceRadiusReport rep;
    rep.sp = spectral_radius(b);
    CplxMatrix power = b;
    double prev_root = 0.0;
    int prev_dir = 0;
    for (int n = 1; n <= T; ++n) {
        TraceRadiusRow row;
        row.n = n;
        row.trace = power.trace();
        row.root = std::pow(std::abs(row.trace), 1.0 / n);
        row.gap = std::abs(row.root - rep.sp);
        if (n > 1) {
            const int dir = row.root > prev_root ? 1 : (row.root < prev_root ? -1 : 0);
            if (dir != 0 && prev_dir != 0 && dir != prev_dir) ++rep.direction_changes;
            if (dir != 0) prev_dir = dir;
        }
        prev_root = row.root;
        if (n >= (T + 1) / 2) rep.limsup_estimate = std::max(rep.limsup_estimate, row.root);
        rep.rows.push_back(row);
        if (n < T) power = mul_plain(power, b);
    }
    rep.final_gap = rep.rows.back().gap;
    rep.converged = rep.final_gap <= 1e-3;
    return rep;
}

Theorem1Report theorem1_inequality(const CorrespondenceAction& f, const CorrespondenceAction& F,
                                   long long q, const std::vector<double>& s_list, int t_max,
                                   double tol) {
    if (!f.polarization) throw ActionError("theorem1_inequality: f must carry a polarization");
    if (f.model != F.model) throw CompositionError("theorem1_inequality: model mismatch");
    if (t_max < 1) throw DomainError("theorem1_inequality: t range is empty");
    for (double s : s_list)
        if (s > 0) throw DomainError("theorem1_inequality: s must be <= 0");
    const VarietyModel& m = *f.model;
    const Rational a = *f.polarization;

    Theorem1Report rep;
    rep.c_per_t[0].assign(static_cast<size_t>(t_max), 0.0);
    rep.c_per_t[1].assign(static_cast<size_t>(t_max), 0.0);

    // Exact iterate norms ||(f^*)^t|_{H^k}|| for every degree.
    std::vector<std::vector<Rational>> h_iter(static_cast<size_t>(2 * m.n) + 1);
    for (int k = 0; k <= 2 * m.n; ++k)
        h_iter[static_cast<size_t>(k)] = iterate_norms_H(f, k, t_max);

    for (double s : s_list) {
        for (int k = 0; k <= 2 * m.n; ++k) {
            if (m.dim(k) == 0) continue;
            // A^{-s} exactly for integer s, else through the fractional power.
            CplxMatrix a_pow;
            if (nearly_integer(s)) {
                const unsigned e = static_cast<unsigned>(std::llround(-s));
                a_pow = to_complex(rat_pow(F.mats[static_cast<size_t>(k)], e));
            } else {
                a_pow = fractional_power(F, k, -s, tol).power;
            }
            const double q_sk2 = std::pow(static_cast<double>(q), s * k / 2.0);
            Theorem1Point base;
            base.s = s;
            base.k = k;
            for (int mi = 0; mi < 2; ++mi) {
                const auto mode = mi == 0 ? ConjugationMode::entrywise
                                          : ConjugationMode::conjugate_transpose;
                const Lemma1Audit audit = lemma1_audit(a_pow, mode, tol);
                base.lemma1_pass[mi] = audit.pass;
                base.sp_factor[mi] = audit.sp_b > 0 ? 1.0 / std::sqrt(audit.sp_b)
                                                    : std::numeric_limits<double>::infinity();
                base.lower_bound_ok[mi] = !audit.pass || base.sp_factor[mi] >= q_sk2 / 2.0 - tol;
            }
            for (int t = 1; t <= t_max; ++t) {
                Theorem1Point pt = base;
                pt.t = t;
                const double norm_t = to_double(h_iter[static_cast<size_t>(k)][static_cast<size_t>(t - 1)]);
                double rhs = 0.0;
                for (int j = 0; j <= m.n; ++j)
                    rhs = std::max(rhs, std::pow(static_cast<double>(q), s * j) *
                                            std::pow(to_double(a), static_cast<double>(t) * j));
                pt.rhs = rhs;
                for (int mi = 0; mi < 2; ++mi) {
                    pt.lhs[mi] = pt.sp_factor[mi] * norm_t;
                    const double ratio = pt.lhs[mi] / rhs;
                    auto& slice = rep.c_per_t[mi][static_cast<size_t>(t - 1)];
                    slice = std::max(slice, ratio);
                    rep.c_global[mi] = std::max(rep.c_global[mi], ratio);
                }
                rep.points.push_back(pt);
            }
        }
    }
    return rep;
}

}  // namespace wdlab
