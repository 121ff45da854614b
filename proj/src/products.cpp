#include "wdlab/products.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wdlab {

Eigen::Index kunneth_index(const VarietyModel& a, const VarietyModel& b, int k, int l,
                           Eigen::Index i, Eigen::Index j) {
    const int m = k + l;
    Eigen::Index offset = 0;
    for (int kk = std::max(0, m - 2 * b.n); kk < k; ++kk) offset += a.dim(kk) * b.dim(m - kk);
    return offset + i * b.dim(l) + j;
}

VarietyModel kunneth(const VarietyModel& a, const VarietyModel& b) {
    VarietyModel p;
    p.n = a.n + b.n;
    const int top = 2 * p.n;
    p.dims.assign(static_cast<size_t>(top) + 1, 0);
    for (int m = 0; m <= top; ++m)
        for (int k = std::max(0, m - 2 * b.n); k <= std::min(2 * a.n, m); ++k)
            p.dims[static_cast<size_t>(m)] += a.dim(k) * b.dim(m - k);

    p.labels.assign(static_cast<size_t>(top) + 1, {});
    for (int m = 0; m <= top; ++m)
        for (int k = std::max(0, m - 2 * b.n); k <= std::min(2 * a.n, m); ++k)
            for (Eigen::Index i = 0; i < a.dim(k); ++i)
                for (Eigen::Index j = 0; j < b.dim(m - k); ++j)
                    p.labels[static_cast<size_t>(m)].push_back(
                        a.labels[static_cast<size_t>(k)][static_cast<size_t>(i)] + "*" +
                        b.labels[static_cast<size_t>(m - k)][static_cast<size_t>(j)]);

    allocate_cup_blocks(p);
    // (x (x) y) cup (z (x) w) = (-1)^{deg y deg z} (x cup z) (x) (y cup w)
    for (int m1 = 0; m1 <= top; ++m1)
        for (int m2 = 0; m1 + m2 <= top; ++m2) {
            RatMatrix& block = p.cup_block(m1, m2);
            for (int k1 = std::max(0, m1 - 2 * b.n); k1 <= std::min(2 * a.n, m1); ++k1) {
                const int l1 = m1 - k1;
                for (int k2 = std::max(0, m2 - 2 * b.n); k2 <= std::min(2 * a.n, m2); ++k2) {
                    const int l2 = m2 - k2;
                    if (k1 + k2 > 2 * a.n || l1 + l2 > 2 * b.n) continue;
                    const Rational sign = (l1 % 2 == 1 && k2 % 2 == 1) ? -1 : 1;
                    const RatMatrix& ca = a.cup_block(k1, k2);
                    const RatMatrix& cb = b.cup_block(l1, l2);
                    for (Eigen::Index i1 = 0; i1 < a.dim(k1); ++i1)
                        for (Eigen::Index j1 = 0; j1 < b.dim(l1); ++j1)
                            for (Eigen::Index i2 = 0; i2 < a.dim(k2); ++i2)
                                for (Eigen::Index j2 = 0; j2 < b.dim(l2); ++j2) {
                                    const Eigen::Index row1 = kunneth_index(a, b, k1, l1, i1, j1);
                                    const Eigen::Index row2 = kunneth_index(a, b, k2, l2, i2, j2);
                                    const Eigen::Index row = row1 * p.dim(m2) + row2;
                                    for (Eigen::Index ta = 0; ta < a.dim(k1 + k2); ++ta) {
                                        const Rational va = ca(i1 * a.dim(k2) + i2, ta);
                                        if (va == 0) continue;
                                        for (Eigen::Index tb = 0; tb < b.dim(l1 + l2); ++tb) {
                                            const Rational vb = cb(j1 * b.dim(l2) + j2, tb);
                                            if (vb == 0) continue;
                                            block(row, kunneth_index(a, b, k1 + k2, l1 + l2, ta, tb)) +=
                                                sign * va * vb;
                                        }
                                    }
                                }
                }
            }
        }

    // Top component is A-top (x) B-top alone; both are one-dimensional.
    p.integrate = RatVector::Zero(p.dim(top));
    p.integrate(kunneth_index(a, b, 2 * a.n, 2 * b.n, 0, 0)) = a.integrate(0) * b.integrate(0);

    p.ample = RatVector::Zero(p.dim(2));
    if (a.n >= 1)
        for (Eigen::Index i = 0; i < a.dim(2); ++i)
            p.ample(kunneth_index(a, b, 2, 0, i, 0)) += a.ample(i);
    if (b.n >= 1)
        for (Eigen::Index j = 0; j < b.dim(2); ++j)
            p.ample(kunneth_index(a, b, 0, 2, 0, j)) += b.ample(j);

    p.algebraic.assign(static_cast<size_t>(p.n) + 1, {});
    for (int j = 0; j <= p.n; ++j) {
        auto& idx = p.algebraic[static_cast<size_t>(j)];
        for (int i = std::max(0, j - b.n); i <= std::min(a.n, j); ++i)
            for (auto ia : a.algebraic[static_cast<size_t>(i)])
                for (auto ib : b.algebraic[static_cast<size_t>(j - i)])
                    idx.push_back(kunneth_index(a, b, 2 * i, 2 * (j - i), ia, ib));
        std::sort(idx.begin(), idx.end());
    }

    if (a.q && b.q && *a.q == *b.q) p.q = a.q;
    return p;
}

std::vector<RatMatrix> kunneth_action_matrices(const VarietyModel& a, const VarietyModel& b,
                                               const std::vector<RatMatrix>& fa,
                                               const std::vector<RatMatrix>& fb) {
    const int top = 2 * (a.n + b.n);
    std::vector<RatMatrix> out(static_cast<size_t>(top) + 1);
    const VarietyModel& A = a;
    const VarietyModel& B = b;
    for (int m = 0; m <= top; ++m) {
        Eigen::Index dm = 0;
        for (int k = std::max(0, m - 2 * B.n); k <= std::min(2 * A.n, m); ++k)
            dm += A.dim(k) * B.dim(m - k);
        RatMatrix mat = RatMatrix::Zero(dm, dm);
        for (int k = std::max(0, m - 2 * B.n); k <= std::min(2 * A.n, m); ++k) {
            const int l = m - k;
            const RatMatrix& ma = fa[static_cast<size_t>(k)];
            const RatMatrix& mb = fb[static_cast<size_t>(l)];
            for (Eigen::Index i = 0; i < A.dim(k); ++i)
                for (Eigen::Index j = 0; j < B.dim(l); ++j)
                    for (Eigen::Index i2 = 0; i2 < A.dim(k); ++i2)
                        for (Eigen::Index j2 = 0; j2 < B.dim(l); ++j2)
                            mat(kunneth_index(A, B, k, l, i2, j2),
                                kunneth_index(A, B, k, l, i, j)) = ma(i2, i) * mb(j2, j);
        }
        out[static_cast<size_t>(m)] = std::move(mat);
    }
    return out;
}

std::vector<std::vector<int>> exterior_subsets(int two_g, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k));
    // lexicographic k-combinations of {0..two_g-1}
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < two_g; ++v) {
            cur[static_cast<size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

namespace {

// Shuffle sign of merging two disjoint sorted subsets; 0 if they intersect.
int wedge_sign(const std::vector<int>& s, const std::vector<int>& t) {
    int inversions = 0;
    for (int a : s)
        for (int b : t) {
            if (a == b) return 0;
            if (a > b) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<int> merged(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> u;
    u.reserve(s.size() + t.size());
    std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
    return u;
}

bool is_standard_symplectic(const RatMatrix& omega) {
    const Eigen::Index n = omega.rows();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Rational expect(0);
            if (i % 2 == 0 && j == i + 1) expect = 1;
            if (i % 2 == 1 && j == i - 1) expect = -1;
            if (omega(i, j) != expect) return false;
        }
    return true;
}

}  // namespace

VarietyModel exterior_model(const RatMatrix& omega, const std::vector<std::string>& h1_labels) {
    const Eigen::Index two_g = omega.rows();
    if (two_g == 0 || two_g % 2 != 0 || omega.cols() != two_g)
        throw ModelError("exterior_model: H^1 dimension must be even and positive");
    for (Eigen::Index i = 0; i < two_g; ++i)
        for (Eigen::Index j = 0; j < two_g; ++j)
            if (omega(i, j) != -omega(j, i))
                throw ModelError("exterior_model: pairing form is not alternating");
    if (exact_det(omega) == 0) throw ModelError("exterior_model: alternating form is degenerate");

    const int g = static_cast<int>(two_g / 2);
    std::vector<std::string> base_labels;
    for (Eigen::Index i = 0; i < two_g; ++i)
        base_labels.push_back(i < static_cast<Eigen::Index>(h1_labels.size())
                                  ? h1_labels[static_cast<size_t>(i)]
                                  : "e" + std::to_string(i + 1));

    VarietyModel m;
    m.n = g;
    const int top = 2 * g;
    std::vector<std::vector<std::vector<int>>> subsets(static_cast<size_t>(top) + 1);
    std::map<std::vector<int>, Eigen::Index> position;
    m.dims.assign(static_cast<size_t>(top) + 1, 0);
    m.labels.assign(static_cast<size_t>(top) + 1, {});
    for (int k = 0; k <= top; ++k) {
        subsets[static_cast<size_t>(k)] = exterior_subsets(static_cast<int>(two_g), k);
        m.dims[static_cast<size_t>(k)] =
            static_cast<Eigen::Index>(subsets[static_cast<size_t>(k)].size());
        for (size_t s = 0; s < subsets[static_cast<size_t>(k)].size(); ++s) {
            const auto& sub = subsets[static_cast<size_t>(k)][s];
            position[sub] = static_cast<Eigen::Index>(s);
            std::string label = sub.empty() ? "1" : "";
            for (size_t t = 0; t < sub.size(); ++t)
                label += (t ? "^" : "") + base_labels[static_cast<size_t>(sub[t])];
            m.labels[static_cast<size_t>(k)].push_back(label);
        }
    }

    allocate_cup_blocks(m);
    for (int k = 0; k <= top; ++k)
        for (int l = 0; k + l <= top; ++l) {
            RatMatrix& block = m.cup_block(k, l);
            const auto& sk = subsets[static_cast<size_t>(k)];
            const auto& sl = subsets[static_cast<size_t>(l)];
            for (size_t i = 0; i < sk.size(); ++i)
                for (size_t j = 0; j < sl.size(); ++j) {
                    const int sign = wedge_sign(sk[i], sl[j]);
                    if (sign == 0) continue;
                    block(static_cast<Eigen::Index>(i) * m.dim(l) + static_cast<Eigen::Index>(j),
                          position.at(merged(sk[i], sl[j]))) = sign;
                }
        }

    // Ample class h = sum_{i<j} omega_ij e_i ^ e_j.
    m.ample = RatVector::Zero(m.dim(2));
    for (Eigen::Index i = 0; i < two_g; ++i)
        for (Eigen::Index j = i + 1; j < two_g; ++j)
            if (omega(i, j) != 0)
                m.ample(position.at(std::vector<int>{static_cast<int>(i), static_cast<int>(j)})) =
                    omega(i, j);

    // Integrate normalized by the Pfaffian: coefficient of e_full in h^g is g!*Pf.
    m.integrate = RatVector::Ones(1);  // provisional, needed by ample_power/cup only
    GradedVector hg = graded_unit(m);
    for (int i = 0; i < g; ++i) hg = cup_product(m, hg, GradedVector{2, m.ample});
    Rational gfact(1);
    for (int i = 2; i <= g; ++i) gfact *= i;
    const Rational pf = hg.coords(0) / gfact;
    if (pf == 0) throw ModelError("exterior_model: Pfaffian vanishes");
    m.integrate(0) = pf;

    m.algebraic.assign(static_cast<size_t>(g) + 1, {});
    if (is_standard_symplectic(omega)) {
        // Unions of j symplectic pairs {2i, 2i+1}.
        for (int j = 0; j <= g; ++j) {
            for (const auto& pairs : exterior_subsets(g, j)) {
                std::vector<int> sub;
                for (int p : pairs) {
                    sub.push_back(2 * p);
                    sub.push_back(2 * p + 1);
                }
                m.algebraic[static_cast<size_t>(j)].push_back(position.at(sub));
            }
            std::sort(m.algebraic[static_cast<size_t>(j)].begin(),
                      m.algebraic[static_cast<size_t>(j)].end());
        }
    } else {
        for (int j = 0; j <= g; ++j)
            for (Eigen::Index i = 0; i < m.dim(2 * j); ++i)
                m.algebraic[static_cast<size_t>(j)].push_back(i);
    }
    return m;
}

std::vector<RatMatrix> exterior_action_matrices(int two_g, const RatMatrix& h1) {
    if (h1.rows() != two_g || h1.cols() != two_g)
        throw DimensionError("exterior_action_matrices: H^1 action shape mismatch");
    std::vector<RatMatrix> out(static_cast<size_t>(two_g) + 1);
    for (int k = 0; k <= two_g; ++k) {
        const auto subs = exterior_subsets(two_g, k);
        RatMatrix mat(static_cast<Eigen::Index>(subs.size()), static_cast<Eigen::Index>(subs.size()));
        for (size_t col = 0; col < subs.size(); ++col)
            for (size_t row = 0; row < subs.size(); ++row) {
                // minor det(h1[rows(row), cols(col)])
                RatMatrix minor(k, k);
                for (int ri = 0; ri < k; ++ri)
                    for (int ci = 0; ci < k; ++ci)
                        minor(ri, ci) = h1(subs[row][static_cast<size_t>(ri)],
                                           subs[col][static_cast<size_t>(ci)]);
                mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                    k == 0 ? Rational(1) : exact_det(minor);
            }
        out[static_cast<size_t>(k)] = std::move(mat);
    }
    return out;
}

}  // namespace wdlab
