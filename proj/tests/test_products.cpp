#include <doctest.h>

#include "support.hpp"
#include "wdlab/models.hpp"

using namespace wdlab;

TEST_CASE("Kunneth dimensions") {
    const ModelBundle p1 = projective_space_model(1, 2);
    const VarietyModel sq = kunneth(*p1.model, *p1.model);
    CHECK(sq.dims == std::vector<Eigen::Index>{1, 0, 2, 0, 1});

    const ModelBundle e = elliptic_model(5, 1);
    const VarietyModel ee = kunneth(*e.model, *e.model);
    CHECK(ee.dims == std::vector<Eigen::Index>{1, 4, 6, 4, 1});
    CHECK(validate_model(ee).ok());
}

TEST_CASE("Kunneth with the point model is the identity") {
    const ModelBundle e = elliptic_model(7, 2);
    const VarietyModel prod = kunneth(*e.model, point_model());
    CHECK(prod.n == e.model->n);
    CHECK(prod.dims == e.model->dims);
    for (int k = 0; k <= 2 * prod.n; ++k)
        for (int l = 0; k + l <= 2 * prod.n; ++l) {
            const RatMatrix& a = prod.cup_block(k, l);
            const RatMatrix& b = e.model->cup_block(k, l);
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                for (Eigen::Index j = 0; j < a.cols(); ++j) CHECK(a(i, j) == b(i, j));
        }
    CHECK(prod.integrate(0) == e.model->integrate(0));
    CHECK(prod.algebraic == e.model->algebraic);
}

TEST_CASE("Kunneth integrate of the summed ample class is binomial-weighted") {
    const ModelBundle a = projective_space_model(2, 3);
    const ModelBundle b = elliptic_model(3, -1);
    const VarietyModel prod = kunneth(*a.model, *b.model);
    const int n = prod.n;
    const Rational lhs = integrate_top(prod, ample_power(prod, n));
    // C(n, n_A) * integrate(h_A^{n_A}) * integrate(h_B^{n_B})
    Rational binom(1);
    for (int i = 0; i < a.model->n; ++i)
        binom = binom * Rational(n - i) / Rational(i + 1);
    const Rational rhs = binom * integrate_top(*a.model, ample_power(*a.model, a.model->n)) *
                         integrate_top(*b.model, ample_power(*b.model, b.model->n));
    CHECK(lhs == rhs);
}

TEST_CASE("exterior model dimensions and wedge algebra") {
    RatMatrix omega = RatMatrix::Zero(2, 2);
    omega(0, 1) = 1;
    omega(1, 0) = -1;
    const VarietyModel g1 = exterior_model(omega);
    CHECK(g1.dims == std::vector<Eigen::Index>{1, 2, 1});
    CHECK(validate_model(g1).ok());

    // wedge-square of a generic H^1 vector vanishes
    GradedVector v = graded_zero(g1, 1);
    v.coords(0) = Rational(3, 2);
    v.coords(1) = Rational(-5);
    const GradedVector sq = cup_product(g1, v, v);
    CHECK(sq.coords(0) == 0);

    // H^1 pairing equals the given alternating form
    const RatMatrix p = pairing_matrix(g1, 1);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) CHECK(p(i, j) == omega(i, j));

    RatMatrix omega4 = RatMatrix::Zero(4, 4);
    for (int i = 0; i < 4; i += 2) {
        omega4(i, i + 1) = 1;
        omega4(i + 1, i) = -1;
    }
    const VarietyModel g2 = exterior_model(omega4);
    CHECK(g2.dims == std::vector<Eigen::Index>{1, 4, 6, 4, 1});
    CHECK(validate_model(g2).ok());
    // algebraic level 1 is the two symplectic-pair classes
    CHECK(g2.algebraic[1].size() == 2);
}

TEST_CASE("exterior model rejects bad forms") {
    CHECK_THROWS_AS(exterior_model(RatMatrix::Zero(3, 3)), ModelError);  // odd dim
    RatMatrix zero2 = RatMatrix::Zero(2, 2);
    CHECK_THROWS_AS(exterior_model(zero2), ModelError);  // degenerate
    RatMatrix sym(2, 2);
    sym << Rational(0), Rational(1), Rational(1), Rational(0);
    CHECK_THROWS_AS(exterior_model(sym), ModelError);  // not alternating
}

TEST_CASE("exterior action matrices are functorial") {
    std::mt19937 rng(8);
    const RatMatrix a = testsupport::random_int_matrix(rng, 4, 2);
    const RatMatrix b = testsupport::random_int_matrix(rng, 4, 2);
    const auto la = exterior_action_matrices(4, a);
    const auto lb = exterior_action_matrices(4, b);
    const auto lab = exterior_action_matrices(4, (a * b).eval());
    for (int k = 0; k <= 4; ++k) {
        const RatMatrix prod = la[static_cast<size_t>(k)] * lb[static_cast<size_t>(k)];
        for (Eigen::Index i = 0; i < prod.rows(); ++i)
            for (Eigen::Index j = 0; j < prod.cols(); ++j)
                CHECK(prod(i, j) == lab[static_cast<size_t>(k)](i, j));
    }
}
