#include "wdlab/models.hpp"

#include <numeric>

namespace wdlab {

namespace {

bool small_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_curve(const CurveSpec& c) {
    if (c.p < 3 || c.p >= 10'000 || !small_prime(c.p))
        throw SpecError("curve field characteristic must be an odd prime below 10^4");
    const long long a4 = ((c.a4 % c.p) + c.p) % c.p;
    const long long a6 = ((c.a6 % c.p) + c.p) % c.p;
    const long long disc = ((4 * a4 % c.p) * a4 % c.p * a4 % c.p + 27 * a6 % c.p * a6 % c.p) % c.p;
    if (disc == 0) throw SpecError("singular curve: 4 a4^3 + 27 a6^2 = 0 in F_p");
}

CountResult finish_count(const CurveSpec& c, long long count) {
    CountResult r{c.p, count, c.p + 1 - count};
    if (r.trace * r.trace > 4 * c.p)
        throw Error("point count violates the Hasse bound; counting bug");
    return r;
}

RatMatrix standard_symplectic(int two_g) {
    RatMatrix omega = RatMatrix::Zero(two_g, two_g);
    for (int i = 0; i + 1 < two_g; i += 2) {
        omega(i, i + 1) = 1;
        omega(i + 1, i) = -1;
    }
    return omega;
}

RatMatrix frobenius_companion(long long q, long long a) {
    RatMatrix c(2, 2);
    c << Rational(0), Rational(-q), Rational(1), Rational(a);
    return c;
}

}  // namespace

CountResult ec_point_count(const CurveSpec& c) {
    check_curve(c);
    const long long p = c.p;
    std::vector<long long> sq_count(static_cast<size_t>(p), 0);
    for (long long y = 0; y < p; ++y) ++sq_count[static_cast<size_t>(y * y % p)];
    long long affine = 0;
    for (long long x = 0; x < p; ++x) {
        const long long fx = ((x * x % p) * x % p + c.a4 % p * x % p + c.a6 % p + 2 * p * p) % p;
        affine += sq_count[static_cast<size_t>(fx)];
    }
    return finish_count(c, affine + 1);
}

CountResult ec_point_count_naive(const CurveSpec& c) {
    check_curve(c);
    const long long p = c.p;
    long long affine = 0;
    for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y) {
            const long long lhs = y * y % p;
            const long long rhs = ((x * x % p) * x % p + c.a4 % p * x % p + c.a6 % p + 2 * p * p) % p;
            if (lhs == rhs) ++affine;
        }
    return finish_count(c, affine + 1);
}

ModelBundle projective_space_model(int n, long long q) {
    if (n < 1) throw SpecError("projective space dimension must be >= 1");
    if (q < 2) throw SpecError("base-field cardinality must be >= 2");
    auto m = std::make_shared<VarietyModel>();
    m->n = n;
    m->dims.assign(static_cast<size_t>(2 * n) + 1, 0);
    for (int j = 0; j <= n; ++j) m->dims[static_cast<size_t>(2 * j)] = 1;
    m->labels.assign(static_cast<size_t>(2 * n) + 1, {});
    m->labels[0] = {"1"};
    for (int j = 1; j <= n; ++j)
        m->labels[static_cast<size_t>(2 * j)] = {j == 1 ? "h" : "h^" + std::to_string(j)};
    allocate_cup_blocks(*m);
    for (int k = 0; k <= 2 * n; k += 2)
        for (int l = 0; k + l <= 2 * n; l += 2) m->cup_block(k, l)(0, 0) = 1;
    m->integrate = RatVector::Ones(1);
    m->ample = RatVector::Ones(1);
    m->algebraic.assign(static_cast<size_t>(n) + 1, {0});
    m->q = q;

    ModelBundle bundle;
    bundle.model = m;
    bundle.add("identity", identity_action(m));
    std::vector<RatMatrix> fr(static_cast<size_t>(2 * n) + 1);
    Rational qj(1);
    for (int k = 0; k <= 2 * n; ++k) {
        fr[static_cast<size_t>(k)] = RatMatrix::Zero(m->dim(k), m->dim(k));
        if (k % 2 == 0 && m->dim(k) == 1) {
            fr[static_cast<size_t>(k)](0, 0) = qj;
            qj *= q;
        }
    }
    bundle.add("frobenius", make_action(m, std::move(fr), true, Rational(q)));
    return bundle;
}

ModelBundle elliptic_model(long long q, long long a) {
    if (q < 2) throw SpecError("base-field cardinality must be >= 2");
    if (a * a > 4 * q) throw SpecError("Weil bound violated: a^2 > 4q");
    auto m = std::make_shared<VarietyModel>(exterior_model(standard_symplectic(2)));
    m->q = q;
    ModelPtr model = m;
    ModelBundle bundle;
    bundle.model = model;
    bundle.add("identity", identity_action(model));
    auto fr = exterior_action_matrices(2, frobenius_companion(q, a));
    bundle.add("frobenius", make_action(model, std::move(fr), true, Rational(q)));
    return bundle;
}

ModelBundle elliptic_model_from_curve(const CurveSpec& c) {
    const CountResult r = ec_point_count(c);
    return elliptic_model(r.p, r.trace);
}

ModelBundle abelian_product_model(const std::vector<CountResult>& curves) {
    if (curves.empty()) throw SpecError("abelian product needs at least one curve");
    const long long q = curves.front().p;
    for (const auto& c : curves) {
        if (c.p != q) throw SpecError("abelian product: curves over mixed base fields");
        if (c.trace != c.p + 1 - c.count)
            throw SpecError("abelian product: inconsistent count/trace pair");
        if (c.trace * c.trace > 4 * c.p)
            throw SpecError("abelian product: trace violates the Hasse bound");
    }
    const int g = static_cast<int>(curves.size());
    auto m = std::make_shared<VarietyModel>(exterior_model(standard_symplectic(2 * g)));
    m->q = q;
    ModelPtr model = m;

    RatMatrix h1 = RatMatrix::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i)
        h1.block(2 * i, 2 * i, 2, 2) = frobenius_companion(q, curves[static_cast<size_t>(i)].trace);

    ModelBundle bundle;
    bundle.model = model;
    bundle.add("identity", identity_action(model));
    bundle.add("frobenius",
               make_action(model, exterior_action_matrices(2 * g, h1), true, Rational(q)));
    return bundle;
}

ModelBundle kunneth_bundle(const ModelBundle& a, const ModelBundle& b) {
    auto m = std::make_shared<VarietyModel>(kunneth(*a.model, *b.model));
    ModelBundle bundle;
    bundle.model = m;
    for (const auto& [name, fa] : a.actions) {
        const CorrespondenceAction* fb = b.find(name);
        if (!fb) continue;
        std::optional<Rational> pol;
        if (fa.polarization && fb->polarization && *fa.polarization == *fb->polarization)
            pol = fa.polarization;
        bundle.add(name, make_action(m,
                                     kunneth_action_matrices(*a.model, *b.model, fa.mats, fb->mats),
                                     fa.is_ring_map && fb->is_ring_map, std::move(pol)));
    }
    return bundle;
}

CorrespondenceAction mult_by_m_endomorphism(const ModelPtr& model, long long m) {
    if (m > -2 && m < 2) throw DomainError("multiplication needs |m| >= 2");
    const int n = model->n;
    // abelian shape: dims must be the binomial pattern C(2n, k)
    long long binom = 1;
    for (int k = 0; k <= 2 * n; ++k) {
        if (model->dim(k) != static_cast<Eigen::Index>(binom))
            throw UnsupportedModelError("multiplication-by-m needs an abelian-type model");
        binom = binom * (2 * n - k) / (k + 1);
    }
    std::vector<RatMatrix> mats;
    Rational mk(1);
    for (int k = 0; k <= 2 * n; ++k) {
        mats.push_back(mk * rat_identity(model->dim(k)));
        mk *= m;
    }
    return make_action(model, std::move(mats), true, Rational(m) * Rational(m));
}

ModelBundle synthetic_nonsemisimple_bundle() {
    const ModelBundle e1 = elliptic_model(5, 2);
    const ModelBundle e2 = elliptic_model(5, -1);
    ModelBundle prod = kunneth_bundle(e1, e2);
    const ModelPtr m = prod.model;

    // H^2 splits as A^1 indices + the 4-dim transcendental-like complement.
    std::vector<RatMatrix> mats;
    for (int k = 0; k <= 2 * m->n; ++k) mats.push_back(rat_identity(m->dim(k)));
    RatMatrix m2 = RatMatrix::Zero(m->dim(2), m->dim(2));
    const auto& alg = m->algebraic[1];
    std::vector<Eigen::Index> comp;
    {
        std::vector<bool> in(static_cast<size_t>(m->dim(2)), false);
        for (auto i : alg) in[static_cast<size_t>(i)] = true;
        for (Eigen::Index i = 0; i < m->dim(2); ++i)
            if (!in[static_cast<size_t>(i)]) comp.push_back(i);
    }
    for (auto i : alg) m2(i, i) = 2;  // scalar on A^1: b_alg = 1
    // Jordan block of size 2 at eigenvalue 2 on the first two complement
    // coordinates, scalar 2 on the rest: b_coh = 2 at top modulus.
    for (size_t t = 0; t < comp.size(); ++t) m2(comp[t], comp[t]) = 2;
    if (comp.size() >= 2) m2(comp[0], comp[1]) = 1;
    mats[2] = std::move(m2);
    mats[4](0, 0) = 4;
    prod.add("synthetic", make_action(m, std::move(mats), false));
    return prod;
}

CorrespondenceAction synthetic_ddc_failure_action(const ModelBundle& exe) {
    const ModelPtr m = exe.model;
    std::vector<RatMatrix> mats;
    for (int k = 0; k <= 2 * m->n; ++k) mats.push_back(rat_identity(m->dim(k)));
    RatMatrix m2 = rat_identity(m->dim(2));
    std::vector<bool> in(static_cast<size_t>(m->dim(2)), false);
    for (auto i : m->algebraic[1]) in[static_cast<size_t>(i)] = true;
    for (Eigen::Index i = 0; i < m->dim(2); ++i)
        if (!in[static_cast<size_t>(i)]) m2(i, i) = 2;  // scale only outside A^1
    mats[2] = std::move(m2);
    return make_action(m, std::move(mats), false);
}

}  // namespace wdlab
