#include "wdlab/action.hpp"

#include <cmath>

namespace wdlab {

namespace {

// A^j index set and its complement within degree 2j.
std::pair<std::vector<Eigen::Index>, std::vector<Eigen::Index>> split_indices(
    const VarietyModel& m, int j) {
    const auto& idx = m.algebraic[static_cast<size_t>(j)];
    std::vector<bool> in(static_cast<size_t>(m.dim(2 * j)), false);
    for (auto i : idx) in[static_cast<size_t>(i)] = true;
    std::vector<Eigen::Index> comp;
    for (Eigen::Index i = 0; i < m.dim(2 * j); ++i)
        if (!in[static_cast<size_t>(i)]) comp.push_back(i);
    return {idx, comp};
}

bool block_is_zero(const RatMatrix& m, const std::vector<Eigen::Index>& rows,
                   const std::vector<Eigen::Index>& cols) {
    for (auto r : rows)
        for (auto c : cols)
            if (m(r, c) != 0) return false;
    return true;
}

GradedVector as_graded(int degree, RatVector coords) { return {degree, std::move(coords)}; }

}  // namespace

CorrespondenceAction make_action(ModelPtr model, std::vector<RatMatrix> mats, bool is_ring_map,
                                 std::optional<Rational> polarization) {
    if (!model) throw ActionError("action requires a model");
    const VarietyModel& m = *model;
    if (static_cast<int>(mats.size()) != 2 * m.n + 1)
        throw ActionError("action needs one matrix per degree 0..2n");
    for (int k = 0; k <= 2 * m.n; ++k) {
        const RatMatrix& mk = mats[static_cast<size_t>(k)];
        if (mk.rows() != m.dim(k) || mk.cols() != m.dim(k))
            throw ActionError("matrix shape at degree " + std::to_string(k) + " must be " +
                              std::to_string(m.dim(k)) + " square");
    }
    if (is_ring_map && mats[0](0, 0) != 1)
        throw ActionError("ring maps act as the identity on H^0");
    for (int j = 0; j <= m.n; ++j) {
        const auto [idx, comp] = split_indices(m, j);
        const RatMatrix& mk = mats[static_cast<size_t>(2 * j)];
        if (!block_is_zero(mk, comp, idx))
            throw ActionError("M_" + std::to_string(2 * j) + " does not map A^" + std::to_string(j) +
                              " into itself");
        if (!block_is_zero(mk, idx, comp))
            throw ActionError("M_" + std::to_string(2 * j) + " does not preserve the complement of A^" +
                              std::to_string(j));
    }
    if (polarization) {
        if (*polarization <= 1) throw ActionError("polarization must exceed 1");
        if (m.n >= 1) {
            const RatVector lhs = mats[2] * m.ample;
            for (Eigen::Index i = 0; i < lhs.size(); ++i)
                if (lhs(i) != *polarization * m.ample(i))
                    throw ActionError("polarization identity M_2 h = a h fails");
        }
    }
    CorrespondenceAction f;
    f.model = std::move(model);
    f.mats = std::move(mats);
    f.is_ring_map = is_ring_map;
    f.polarization = std::move(polarization);
    return f;
}

CorrespondenceAction identity_action(ModelPtr model) {
    std::vector<RatMatrix> mats;
    for (int k = 0; k <= 2 * model->n; ++k) mats.push_back(rat_identity(model->dim(k)));
    return make_action(std::move(model), std::move(mats), true);
}

Rational norm_H(const CorrespondenceAction& f, int k) {
    const VarietyModel& m = *f.model;
    if (k < 0 || k > 2 * m.n) throw DegreeError("norm_H: degree out of range");
    if (m.dim(k) == 0) return Rational(0);
    const auto w = dual_basis(m, k);
    const RatMatrix& mk = f.mats[static_cast<size_t>(k)];
    Rational acc(0);
    for (Eigen::Index i = 0; i < m.dim(k); ++i) {
        const GradedVector image = as_graded(k, mk.col(i));
        for (const auto& wj : w)
            acc += rat_abs(integrate_top(m, cup_product(m, image, wj)));
    }
    return acc;
}

Rational norm_N(const CorrespondenceAction& f, int j) {
    const VarietyModel& m = *f.model;
    if (j < 0 || j > m.n) throw DegreeError("norm_N: level out of range");
    const auto& rows = m.algebraic[static_cast<size_t>(j)];
    const auto& cols = m.algebraic[static_cast<size_t>(m.n - j)];
    if (rows.size() != cols.size())
        throw ModelError("norm_N: algebraic levels " + std::to_string(j) + " and " +
                         std::to_string(m.n - j) + " have different dimensions");
    // Induced pairing Q[s][t] = integrate(a_s^{(j)} cup a_t^{(n-j)}).
    const RatMatrix p = pairing_matrix(m, 2 * j);
    RatMatrix q(rows.size(), cols.size());
    for (size_t s = 0; s < rows.size(); ++s)
        for (size_t t = 0; t < cols.size(); ++t)
            q(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) = p(rows[s], cols[t]);
    RatMatrix qinv;
    try {
        qinv = exact_inverse(q);
    } catch (const ModelError&) {
        throw ModelError("norm_N: induced pairing on A^" + std::to_string(j) + " is degenerate");
    }
    const RatMatrix& mk = f.mats[static_cast<size_t>(2 * j)];
    Rational acc(0);
    for (size_t i = 0; i < rows.size(); ++i) {
        const GradedVector image = as_graded(2 * j, mk.col(rows[i]));
        for (size_t dw = 0; dw < rows.size(); ++dw) {
            // dual vector w_dw = sum_t qinv(t, dw) a_t^{(n-j)}, embedded in H^{2(n-j)}
            RatVector wv = RatVector::Zero(m.dim(2 * (m.n - j)));
            for (size_t t = 0; t < cols.size(); ++t)
                wv(cols[t]) = qinv(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(dw));
            acc += rat_abs(integrate_top(m, cup_product(m, image, as_graded(2 * (m.n - j), wv))));
        }
    }
    return acc;
}

Rational deg_j(const CorrespondenceAction& f, int j) {
    const VarietyModel& m = *f.model;
    if (j < 0 || j > m.n) throw DegreeError("deg_j: level out of range");
    const GradedVector hj = ample_power(m, j);
    const GradedVector hnj = ample_power(m, m.n - j);
    const GradedVector pulled = as_graded(2 * j, f.mats[static_cast<size_t>(2 * j)] * hj.coords);
    return integrate_top(m, cup_product(m, pulled, hnj));
}

NormTable norm_table(const CorrespondenceAction& f) {
    const VarietyModel& m = *f.model;
    NormTable t;
    for (int k = 0; k <= 2 * m.n; ++k) t.h_norms.push_back(norm_H(f, k));
    for (int j = 0; j <= m.n; ++j) {
        t.n_norms.push_back(norm_N(f, j));
        t.degrees.push_back(deg_j(f, j));
    }
    return t;
}

CorrespondenceAction transpose(const CorrespondenceAction& f) {
    const VarietyModel& m = *f.model;
    std::vector<RatMatrix> mats(static_cast<size_t>(2 * m.n) + 1);
    for (int k = 0; k <= 2 * m.n; ++k) {
        const int kc = 2 * m.n - k;
        if (m.dim(k) == 0) {
            mats[static_cast<size_t>(kc)] = RatMatrix::Zero(m.dim(kc), m.dim(kc));
            continue;
        }
        const RatMatrix r = pairing_matrix(m, kc);  // rows H^{kc}, cols H^k
        const RatMatrix conj = r * f.mats[static_cast<size_t>(k)] * exact_inverse(r);
        mats[static_cast<size_t>(kc)] = conj.transpose();
    }
    return make_action(f.model, std::move(mats), false);
}

CorrespondenceAction compose(const CorrespondenceAction& f, const CorrespondenceAction& g) {
    if (f.model != g.model) throw CompositionError("compose: actions live on different models");
    std::vector<RatMatrix> mats;
    mats.reserve(f.mats.size());
    for (size_t k = 0; k < f.mats.size(); ++k) mats.push_back(g.mats[k] * f.mats[k]);
    std::optional<Rational> pol;
    if (f.polarization && g.polarization) pol = *f.polarization * *g.polarization;
    return make_action(f.model, std::move(mats), f.is_ring_map && g.is_ring_map, std::move(pol));
}

RatMatrix restriction_to_algebraic(const CorrespondenceAction& f, int j) {
    const VarietyModel& m = *f.model;
    const auto& idx = m.algebraic[static_cast<size_t>(j)];
    const RatMatrix& mk = f.mats[static_cast<size_t>(2 * j)];
    RatMatrix s(idx.size(), idx.size());
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b)
            s(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = mk(idx[a], idx[b]);
    return s;
}

std::vector<Rational> iterate_norms_H(const CorrespondenceAction& f, int k, int T) {
    if (T < 1) throw DomainError("iterate_norms_H: T must be >= 1");
    std::vector<Rational> out;
    CorrespondenceAction power = f;
    for (int t = 1; t <= T; ++t) {
        out.push_back(norm_H(power, k));
        if (t < T) power = compose(power, f);
    }
    return out;
}

std::vector<Rational> iterate_norms_N(const CorrespondenceAction& f, int j, int T) {
    if (T < 1) throw DomainError("iterate_norms_N: T must be >= 1");
    std::vector<Rational> out;
    CorrespondenceAction power = f;
    for (int t = 1; t <= T; ++t) {
        out.push_back(norm_N(power, j));
        if (t < T) power = compose(power, f);
    }
    return out;
}

std::vector<double> root_sequence(const std::vector<Rational>& norms) {
    std::vector<double> out;
    out.reserve(norms.size());
    for (size_t t = 0; t < norms.size(); ++t) {
        if (norms[t] == 0) out.push_back(0.0);
        else out.push_back(std::exp(rat_log(norms[t]) / static_cast<double>(t + 1)));
    }
    return out;
}

}  // namespace wdlab
