#include "wdlab/exact.hpp"

#include <vector>

namespace wdlab {

namespace {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

// Row-wise denominator clearing; preserves rank (and det up to the returned scale).
IntMatrix clear_denominators(const RatMatrix& m, Rational* det_scale = nullptr) {
    IntMatrix out(m.rows(), m.cols());
    Rational scale(1);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Integer l(1);
        for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, rat_den(m(i, j)));
        scale *= Rational(l);
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = rat_num(m(i, j) * Rational(l));
    }
    if (det_scale) *det_scale = scale;
    return out;
}

// Fraction-free Gaussian elimination. Returns rank; when `detp` is non-null the
// matrix must be square and *detp receives det of the integer matrix.
Eigen::Index bareiss(IntMatrix a, Integer* detp) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Integer prev(1);
    Eigen::Index rank = 0;
    int sign = 1;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = rank; r < rows; ++r)
            if (a(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank) {
            a.row(piv).swap(a.row(rank));
            sign = -sign;
        }
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            for (Eigen::Index c = col + 1; c < cols; ++c)
                a(r, c) = (a(rank, col) * a(r, c) - a(r, col) * a(rank, c)) / prev;
            a(r, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    if (detp) {
        if (rank < rows) *detp = 0;
        else *detp = sign > 0 ? prev : Integer(-prev);
    }
    return rank;
}

}  // namespace

Eigen::Index exact_rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(clear_denominators(m), nullptr);
}

Rational exact_det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    Rational scale;
    IntMatrix a = clear_denominators(m, &scale);
    Integer d;
    bareiss(std::move(a), &d);
    return Rational(d) / scale;
}

std::optional<RatVector> exact_solve(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw DimensionError("exact_solve: shape mismatch");
    const Eigen::Index rows = a.rows(), cols = a.cols();
    RatMatrix aug(rows, cols + 1);
    aug.leftCols(cols) = a;
    aug.col(cols) = b;
    // Plain exact Gauss-Jordan on the augmented system.
    Eigen::Index rank = 0;
    std::vector<Eigen::Index> pivot_col;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = rank; r < rows; ++r)
            if (aug(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        aug.row(piv).swap(aug.row(rank));
        const Rational pivot = aug(rank, col);
        aug.row(rank) /= pivot;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == rank || aug(r, col) == 0) continue;
            const Rational f = aug(r, col);
            aug.row(r) -= f * aug.row(rank);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (Eigen::Index r = rank; r < rows; ++r)
        if (aug(r, cols) != 0) return std::nullopt;  // inconsistent
    RatVector x = RatVector::Zero(cols);
    for (Eigen::Index k = 0; k < rank; ++k) x(pivot_col[k]) = aug(k, cols);
    return x;
}

RatMatrix exact_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const Eigen::Index n = m.rows();
    RatMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = rat_identity(n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (aug(r, col) != 0) { piv = r; break; }
        if (piv < 0) throw ModelError("exact_inverse: singular matrix");
        aug.row(piv).swap(aug.row(col));
        const Rational pivot = aug(col, col);
        aug.row(col) /= pivot;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || aug(r, col) == 0) continue;
            const Rational f = aug(r, col);
            aug.row(r) -= f * aug.row(col);
        }
    }
    return aug.rightCols(n);
}

RatMatrix coordinates_in_span(const RatMatrix& basis, const RatMatrix& vecs) {
    if (basis.rows() != vecs.rows()) throw DimensionError("coordinates_in_span: shape mismatch");
    RatMatrix coords(basis.cols(), vecs.cols());
    for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
        auto x = exact_solve(basis, vecs.col(j));
        if (!x) throw DomainError("coordinates_in_span: vector outside the span");
        coords.col(j) = *x;
    }
    return coords;
}

RatPoly charpoly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("charpoly of a non-square matrix");
    const Eigen::Index n = m.rows();
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[n] = 1;
    RatMatrix acc = rat_identity(n);  // N_{k-1}
    for (Eigen::Index k = 1; k <= n; ++k) {
        acc = (m * acc).eval();
        Rational tr(0);
        for (Eigen::Index i = 0; i < n; ++i) tr += acc(i, i);
        const Rational ck = -tr / Rational(static_cast<long long>(k));
        c[n - k] = ck;
        for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += ck;
    }
    return RatPoly(std::move(c));
}

RatPoly minpoly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("minpoly of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return RatPoly::constant(Rational(1));
    RatPoly acc = RatPoly::constant(Rational(1));
    for (Eigen::Index start = 0; start < n; ++start) {
        if (acc.degree() == static_cast<int>(n)) break;  // cannot grow further
        // Krylov chain from e_start: find the first linear dependency.
        RatMatrix chain(n, n + 1);
        RatVector v = RatVector::Zero(n);
        v(start) = 1;
        Eigen::Index len = 0;
        RatPoly local;
        while (true) {
            chain.col(len) = v;
            // Solve chain[:, 0..len-1] * x = chain[:, len]
            if (len > 0) {
                auto x = exact_solve(chain.leftCols(len), chain.col(len));
                if (x) {
                    std::vector<Rational> cs(static_cast<size_t>(len) + 1);
                    for (Eigen::Index i = 0; i < len; ++i) cs[i] = -(*x)(i);
                    cs[len] = 1;
                    local = RatPoly(std::move(cs));
                    break;
                }
            }
            v = (m * v).eval();
            ++len;
        }
        const RatPoly g = poly_gcd(acc, local);
        acc = (acc * local) / g;  // lcm
    }
    return acc.monic();
}

bool is_squarefree(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("is_squarefree: zero polynomial");
    if (p.degree() == 0) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

RatMatrix companion_matrix(const RatPoly& monic) {
    if (monic.degree() < 1) throw DomainError("companion matrix needs degree >= 1");
    if (monic.leading() != 1) throw DomainError("companion matrix needs a monic polynomial");
    const Eigen::Index n = monic.degree();
    RatMatrix c = RatMatrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(static_cast<int>(i));
    return c;
}

RatMatrix jordan_block(const Rational& lambda, Eigen::Index n) {
    RatMatrix j = RatMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        j(i, i) = lambda;
        if (i + 1 < n) j(i, i + 1) = 1;
    }
    return j;
}

}  // namespace wdlab
