#include "wdlab/model.hpp"

#include <sstream>

namespace wdlab {

void allocate_cup_blocks(VarietyModel& m) {
    const int top = 2 * m.n;
    m.cup.assign(static_cast<size_t>(top) + 1, {});
    for (int k = 0; k <= top; ++k) {
        m.cup[static_cast<size_t>(k)].assign(static_cast<size_t>(top) + 1, RatMatrix());
        for (int l = 0; k + l <= top; ++l)
            m.cup_block(k, l) = RatMatrix::Zero(m.dim(k) * m.dim(l), m.dim(k + l));
    }
}

GradedVector graded_zero(const VarietyModel& m, int degree) {
    return {degree, RatVector::Zero(m.dim(degree))};
}

GradedVector graded_unit(const VarietyModel& m) {
    GradedVector v = graded_zero(m, 0);
    v.coords(0) = 1;
    return v;
}

GradedVector cup_product(const VarietyModel& m, const GradedVector& a, const GradedVector& b) {
    const int k = a.degree, l = b.degree;
    if (k < 0 || l < 0 || k + l > 2 * m.n)
        throw DegreeError("cup: degree " + std::to_string(k) + "+" + std::to_string(l) +
                          " exceeds top degree " + std::to_string(2 * m.n));
    GradedVector out = graded_zero(m, k + l);
    const RatMatrix& block = m.cup_block(k, l);
    const Eigen::Index dl = m.dim(l);
    for (Eigen::Index i = 0; i < m.dim(k); ++i) {
        if (a.coords(i) == 0) continue;
        for (Eigen::Index j = 0; j < dl; ++j) {
            if (b.coords(j) == 0) continue;
            out.coords += (a.coords(i) * b.coords(j)) * block.row(i * dl + j).transpose();
        }
    }
    return out;
}

Rational integrate_top(const VarietyModel& m, const GradedVector& v) {
    if (v.degree != 2 * m.n) throw DegreeError("integrate: not a top-degree class");
    Rational acc(0);
    for (Eigen::Index i = 0; i < v.coords.size(); ++i) acc += m.integrate(i) * v.coords(i);
    return acc;
}

RatMatrix pairing_matrix(const VarietyModel& m, int k) {
    const int kc = 2 * m.n - k;
    RatMatrix p(m.dim(k), m.dim(kc));
    const RatMatrix& block = m.cup_block(k, kc);
    const Eigen::Index dc = m.dim(kc);
    for (Eigen::Index i = 0; i < m.dim(k); ++i)
        for (Eigen::Index j = 0; j < dc; ++j) {
            Rational acc(0);
            for (Eigen::Index t = 0; t < m.integrate.size(); ++t)
                acc += m.integrate(t) * block(i * dc + j, t);
            p(i, j) = acc;
        }
    return p;
}

std::vector<GradedVector> dual_basis(const VarietyModel& m, int k) {
    const RatMatrix p = pairing_matrix(m, k);
    if (p.rows() != p.cols()) throw ModelError("dual_basis: pairing matrix is not square");
    RatMatrix inv;
    try {
        inv = exact_inverse(p);
    } catch (const ModelError&) {
        throw ModelError("dual_basis: Poincare pairing is degenerate at degree " + std::to_string(k));
    }
    std::vector<GradedVector> out;
    out.reserve(static_cast<size_t>(p.rows()));
    for (Eigen::Index j = 0; j < p.rows(); ++j) out.push_back({2 * m.n - k, inv.col(j)});
    return out;
}

GradedVector ample_power(const VarietyModel& m, int j) {
    if (j < 0 || j > m.n) throw DegreeError("ample_power: exponent outside 0..n");
    GradedVector acc = graded_unit(m);
    for (int i = 0; i < j; ++i) acc = cup_product(m, acc, GradedVector{2, m.ample});
    return acc;
}

RatMatrix algebraic_basis(const VarietyModel& m, int j) {
    const auto& idx = m.algebraic[static_cast<size_t>(j)];
    RatMatrix basis = RatMatrix::Zero(m.dim(2 * j), static_cast<Eigen::Index>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c) basis(idx[c], static_cast<Eigen::Index>(c)) = 1;
    return basis;
}

std::string ValidationReport::summary() const {
    if (issues.empty()) return "valid";
    std::ostringstream os;
    os << issues.size() << " invariant violation(s):";
    for (const auto& i : issues) os << "\n  [" << i.check << "] " << i.detail;
    return os.str();
}

namespace {

std::string loc2(int k, int l) { return "(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")"; }

bool row_is_zero(const RatMatrix& m, Eigen::Index r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) return false;
    return true;
}

bool rows_match(const RatMatrix& a, Eigen::Index ra, const RatMatrix& b, Eigen::Index rb,
                const Rational& sign) {
    for (Eigen::Index c = 0; c < a.cols(); ++c)
        if (a(ra, c) != sign * b(rb, c)) return false;
    return true;
}

}  // namespace

ValidationReport validate_model(const VarietyModel& m) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& check, const std::string& detail) {
        rep.issues.push_back({check, detail});
    };

    const int top = 2 * m.n;
    if (m.n < 0 || static_cast<int>(m.dims.size()) != top + 1) {
        fail("dims", "expected " + std::to_string(top + 1) + " graded dimensions");
        return rep;
    }
    if (m.dim(0) != 1) fail("dims", "d_0 = " + std::to_string(m.dim(0)) + ", expected 1");
    if (m.dim(top) != 1) fail("dims", "d_2n = " + std::to_string(m.dim(top)) + ", expected 1");
    for (int k = 0; k <= top; ++k) {
        if (m.dim(k) < 0) fail("dims", "negative dimension at degree " + std::to_string(k));
        if (m.dim(k) != m.dim(top - k))
            fail("dims", "Poincare duality dims broken: d_" + std::to_string(k) +
                             " != d_" + std::to_string(top - k));
    }
    if (static_cast<int>(m.labels.size()) != top + 1) fail("labels", "label table size mismatch");
    else
        for (int k = 0; k <= top; ++k)
            if (static_cast<Eigen::Index>(m.labels[static_cast<size_t>(k)].size()) != m.dim(k))
                fail("labels", "label count at degree " + std::to_string(k));
    if (m.integrate.size() != m.dim(top)) fail("integrate", "functional size != d_2n");
    if (m.n >= 1 && m.ample.size() != m.dim(2)) fail("ample", "ample class size != d_2");
    if (static_cast<int>(m.cup.size()) != top + 1) {
        fail("cup", "cup table size mismatch");
        return rep;
    }
    for (int k = 0; k <= top; ++k)
        for (int l = 0; k + l <= top; ++l) {
            const RatMatrix& b = m.cup_block(k, l);
            if (b.rows() != m.dim(k) * m.dim(l) || b.cols() != m.dim(k + l))
                fail("cup", "structure-constant block shape at " + loc2(k, l));
        }
    if (!rep.ok()) return rep;  // deeper checks need sane shapes

    // Unit: the H^0 basis class is a two-sided identity.
    for (int k = 0; k <= top; ++k) {
        const Eigen::Index d = m.dim(k);
        for (Eigen::Index j = 0; j < d; ++j) {
            for (Eigen::Index t = 0; t < d; ++t) {
                const Rational expect = (j == t) ? 1 : 0;
                if (m.cup_block(0, k)(j, t) != expect)
                    fail("unit", "1 cup v_" + std::to_string(j) + " at degree " + std::to_string(k));
                if (m.cup_block(k, 0)(j, t) != expect)
                    fail("unit", "v_" + std::to_string(j) + " cup 1 at degree " + std::to_string(k));
            }
        }
    }

    // Graded commutativity: c_{k,l}(v,w) = (-1)^{kl} c_{l,k}(w,v).
    for (int k = 0; k <= top; ++k)
        for (int l = k; k + l <= top; ++l) {
            const Rational sign = (k % 2 == 1 && l % 2 == 1) ? -1 : 1;
            const RatMatrix& kl = m.cup_block(k, l);
            const RatMatrix& lk = m.cup_block(l, k);
            bool blamed = false;
            for (Eigen::Index i = 0; i < m.dim(k) && !blamed; ++i)
                for (Eigen::Index j = 0; j < m.dim(l) && !blamed; ++j)
                    if (!rows_match(kl, i * m.dim(l) + j, lk, j * m.dim(k) + i, sign)) {
                        fail("graded_commutativity",
                             "at " + loc2(k, l) + " basis pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
                        blamed = true;  // one witness per block pair
                    }
        }

    // Associativity on all basis triples.
    for (int k = 0; k <= top; ++k)
        for (int l = 0; k + l <= top; ++l)
            for (int r = 0; k + l + r <= top; ++r) {
                bool blamed = false;
                for (Eigen::Index i = 0; i < m.dim(k) && !blamed; ++i)
                    for (Eigen::Index j = 0; j < m.dim(l) && !blamed; ++j)
                        for (Eigen::Index t = 0; t < m.dim(r) && !blamed; ++t) {
                            GradedVector vi = graded_zero(m, k), vj = graded_zero(m, l),
                                         vt = graded_zero(m, r);
                            vi.coords(i) = 1;
                            vj.coords(j) = 1;
                            vt.coords(t) = 1;
                            const GradedVector left =
                                cup_product(m, cup_product(m, vi, vj), vt);
                            const GradedVector right =
                                cup_product(m, vi, cup_product(m, vj, vt));
                            if (left.coords != right.coords) {
                                fail("associativity", "at degrees (" + std::to_string(k) + "," +
                                                          std::to_string(l) + "," + std::to_string(r) +
                                                          ") basis (" + std::to_string(i) + "," +
                                                          std::to_string(j) + "," + std::to_string(t) +
                                                          ")");
                                blamed = true;
                            }
                        }
            }

    // Poincare pairing nondegenerate in every degree.
    for (int k = 0; k <= top; ++k) {
        const RatMatrix p = pairing_matrix(m, k);
        if (exact_rank(p) != m.dim(k)) {
            Eigen::Index witness = 0;
            for (Eigen::Index i = 0; i < p.rows(); ++i)
                if (row_is_zero(p, i)) { witness = i; break; }
            fail("pairing_nondegenerate", "degree " + std::to_string(k) + ", witness basis index " +
                                              std::to_string(witness));
        }
    }

    // Ample positivity.
    if (m.n >= 1) {
        bool ample_nonzero = false;
        for (Eigen::Index i = 0; i < m.ample.size(); ++i)
            if (m.ample(i) != 0) ample_nonzero = true;
        if (!ample_nonzero) fail("ample", "ample class is zero");
        else if (integrate_top(m, ample_power(m, m.n)) <= 0)
            fail("ample", "integrate(h^n) is not positive");
    }

    // Algebraic subspaces.
    if (static_cast<int>(m.algebraic.size()) != m.n + 1) {
        fail("algebraic", "expected " + std::to_string(m.n + 1) + " levels");
        return rep;
    }
    for (int j = 0; j <= m.n; ++j) {
        const auto& idx = m.algebraic[static_cast<size_t>(j)];
        if (idx.empty()) fail("algebraic", "A^" + std::to_string(j) + " is empty");
        Eigen::Index prev = -1;
        for (auto i : idx) {
            if (i <= prev || i >= m.dim(2 * j)) {
                fail("algebraic", "A^" + std::to_string(j) + " indices not sorted/unique/in range");
                break;
            }
            prev = i;
        }
    }
    if (!rep.ok()) return rep;
    if (m.algebraic[0] != std::vector<Eigen::Index>{0})
        fail("algebraic", "A^0 must be all of H^0");
    if (m.algebraic[static_cast<size_t>(m.n)] != std::vector<Eigen::Index>{0})
        fail("algebraic", "A^n must be all of H^{2n}");
    for (int j = 0; j <= m.n; ++j) {
        // h^j must lie in the coordinate span of A^j.
        const GradedVector hj = ample_power(m, j);
        std::vector<bool> inA(static_cast<size_t>(m.dim(2 * j)), false);
        for (auto i : m.algebraic[static_cast<size_t>(j)]) inA[static_cast<size_t>(i)] = true;
        for (Eigen::Index i = 0; i < hj.coords.size(); ++i)
            if (hj.coords(i) != 0 && !inA[static_cast<size_t>(i)]) {
                fail("algebraic", "h^" + std::to_string(j) + " falls outside A^" + std::to_string(j));
                break;
            }
        // Induced pairing A^j x A^{n-j} nondegenerate.
        const auto& rows = m.algebraic[static_cast<size_t>(j)];
        const auto& cols = m.algebraic[static_cast<size_t>(m.n - j)];
        if (rows.size() != cols.size()) {
            fail("algebraic_pairing", "dim A^" + std::to_string(j) + " != dim A^" +
                                          std::to_string(m.n - j));
            continue;
        }
        const RatMatrix p = pairing_matrix(m, 2 * j);
        RatMatrix sub(rows.size(), cols.size());
        for (size_t a = 0; a < rows.size(); ++a)
            for (size_t b = 0; b < cols.size(); ++b)
                sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = p(rows[a], cols[b]);
        if (exact_rank(sub) != static_cast<Eigen::Index>(rows.size()))
            fail("algebraic_pairing", "degenerate induced pairing at level " + std::to_string(j));
    }

    if (m.q && *m.q < 2) fail("q", "base-field cardinality must be >= 2");
    return rep;
}

VarietyModel point_model() {
    VarietyModel m;
    m.n = 0;
    m.dims = {1};
    m.labels = {{"1"}};
    allocate_cup_blocks(m);
    m.cup_block(0, 0)(0, 0) = 1;
    m.integrate = RatVector::Ones(1);
    m.ample = RatVector();
    m.algebraic = {{0}};
    return m;
}

}  // namespace wdlab
