#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wdlab/frobenius.hpp"
#include "wdlab/spectral.hpp"

using namespace wdlab;

TEST_CASE("point counts: frozen values and strategy agreement") {
    // y^2 = x^3 + x over F_3: affine points (0,0), (2,1), (2,2); N = 4, a = 0
    const CountResult c1 = ec_point_count({3, 1, 0});
    CHECK(c1.count == 4);
    CHECK(c1.trace == 0);

    // y^2 = x^3 + x + 1 over F_5: N = 9, a = -3
    const CountResult c2 = ec_point_count({5, 1, 1});
    CHECK(c2.count == 9);
    CHECK(c2.trace == -3);

    // the two independent enumeration strategies agree
    std::mt19937 rng(1001);
    for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        for (int trial = 0; trial < 5; ++trial) {
            CurveSpec spec{p, testsupport::rng_int(rng, 0, p - 1),
                           testsupport::rng_int(rng, 0, p - 1)};
            const long long disc = ((4 * spec.a4 % p) * spec.a4 % p * spec.a4 % p +
                                    27 * spec.a6 % p * spec.a6 % p) % p;
            if (disc == 0) continue;
            const CountResult a = ec_point_count(spec);
            const CountResult b = ec_point_count_naive(spec);
            CHECK(a.count == b.count);
            CHECK(a.trace * a.trace <= 4 * p);  // Hasse
        }
    }

    CHECK_THROWS_AS(ec_point_count({4, 1, 1}), SpecError);   // not prime
    CHECK_THROWS_AS(ec_point_count({5, 0, 0}), SpecError);   // singular
    CHECK_THROWS_AS(ec_point_count({10007, 1, 1}), SpecError);  // out of range
}

TEST_CASE("elliptic model from a counted curve") {
    const ModelBundle e = elliptic_model_from_curve({5, 1, 1});
    CHECK(validate_model(*e.model).ok());
    CHECK(e.model->q == 5);
    const CorrespondenceAction& fr = frobenius_action(e);
    // companion of x^2 + 3x + 5 (trace -3)
    CHECK(fr.mats[1](0, 1) == -5);
    CHECK(fr.mats[1](1, 1) == -3);
    CHECK(charpoly(fr.mats[1]) == RatPoly({Rational(5), Rational(3), Rational(1)}));
    for (const auto& row : weil_rh_check(fr, 5, 1e-9)) CHECK(row.pass);
    CHECK_THROWS_AS(elliptic_model(5, 5), SpecError);  // 25 > 20 violates the Weil bound
}

TEST_CASE("projective space bundle") {
    const ModelBundle p4 = projective_space_model(4, 2);
    CHECK(p4.model->dims == std::vector<Eigen::Index>{1, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(validate_model(*p4.model).ok());
    for (const auto& row : ddc_check(frobenius_action(p4))) CHECK(row.pass);
    const NormComparison nc = norm_comparison_constant(frobenius_action(p4));
    REQUIRE(nc.c_exact.has_value());
    CHECK(*nc.c_exact == 1);
    CHECK_THROWS_AS(projective_space_model(0, 2), SpecError);
}

TEST_CASE("abelian product: base case equals the elliptic model") {
    const ModelBundle one = abelian_product_model({ec_point_count({5, 1, 1})});
    const ModelBundle ell = elliptic_model(5, -3);
    CHECK(one.model->dims == ell.model->dims);
    CHECK(one.model->integrate(0) == ell.model->integrate(0));
    CHECK(one.model->algebraic == ell.model->algebraic);
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; k + l <= 2; ++l) {
            const RatMatrix& a = one.model->cup_block(k, l);
            const RatMatrix& b = ell.model->cup_block(k, l);
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                for (Eigen::Index j = 0; j < a.cols(); ++j) CHECK(a(i, j) == b(i, j));
        }
    const CorrespondenceAction& fa = frobenius_action(one);
    const CorrespondenceAction& fb = frobenius_action(ell);
    for (size_t k = 0; k < fa.mats.size(); ++k)
        for (Eigen::Index i = 0; i < fa.mats[k].rows(); ++i)
            for (Eigen::Index j = 0; j < fa.mats[k].cols(); ++j)
                CHECK(fa.mats[k](i, j) == fb.mats[k](i, j));
}

TEST_CASE("abelian product of two curves") {
    const ModelBundle ab = abelian_product_model({{7, 5, 3}, {7, 3, 5}});
    CHECK(ab.model->dims == std::vector<Eigen::Index>{1, 4, 6, 4, 1});
    CHECK(validate_model(*ab.model).ok());
    for (const auto& row : weil_rh_check(frobenius_action(ab), 7, 1e-9)) CHECK(row.pass);
    CHECK_THROWS_AS(abelian_product_model({{7, 5, 3}, {11, 10, 2}}), SpecError);  // mixed q
}

TEST_CASE("E1 x E2 Kunneth bundle: functorial Frobenius") {
    const ModelBundle e1 = elliptic_model(5, 2);
    const ModelBundle e2 = elliptic_model(5, -1);
    const ModelBundle prod = kunneth_bundle(e1, e2);
    CHECK(validate_model(*prod.model).ok());
    const CorrespondenceAction& fr = frobenius_action(prod);
    REQUIRE(fr.polarization.has_value());
    CHECK(*fr.polarization == 5);

    // tensor functoriality on H^1 = H^1(E1) + H^1(E2)
    const auto expected = kunneth_action_matrices(*e1.model, *e2.model,
                                                  frobenius_action(e1).mats,
                                                  frobenius_action(e2).mats);
    for (size_t k = 0; k < fr.mats.size(); ++k)
        for (Eigen::Index i = 0; i < fr.mats[k].rows(); ++i)
            for (Eigen::Index j = 0; j < fr.mats[k].cols(); ++j)
                CHECK(fr.mats[k](i, j) == expected[k](i, j));

    for (const auto& row : weil_rh_check(fr, 5, 1e-9)) CHECK(row.pass);
    for (const auto& row : ddc_check(fr)) CHECK(row.pass);
}

TEST_CASE("multiplication by m") {
    const ModelBundle e = elliptic_model(5, 2);
    const CorrespondenceAction m2 = mult_by_m_endomorphism(e.model, 2);
    CHECK(m2.is_ring_map);
    CHECK(*m2.polarization == 4);
    for (int k = 0; k <= 2; ++k) {
        Rational expect(1);
        for (int i = 0; i < k; ++i) expect *= 2;
        for (Eigen::Index i = 0; i < e.model->dim(k); ++i)
            CHECK(m2.mats[static_cast<size_t>(k)](i, i) == expect);
        CHECK(is_semisimple(m2, k));
    }
    for (const auto& row : ddc_check(m2)) {
        CHECK(row.pass);
        CHECK(row.chi == std::pow(4.0, row.j));
    }

    // negative multiplier
    const CorrespondenceAction mm = mult_by_m_endomorphism(e.model, -2);
    CHECK(mm.mats[1](0, 0) == -2);
    CHECK(*mm.polarization == 4);

    const ModelBundle p2 = projective_space_model(2, 5);
    CHECK_THROWS_AS(mult_by_m_endomorphism(p2.model, 2), UnsupportedModelError);
    CHECK_THROWS_AS(mult_by_m_endomorphism(e.model, 1), DomainError);
}

TEST_CASE("Frobenius commutes with multiplication degreewise") {
    for (const ModelBundle& b :
         {elliptic_model(7, -3), abelian_product_model({{5, 5, 1}, {5, 5, 1}})}) {
        const CorrespondenceAction& fr = frobenius_action(b);
        const CorrespondenceAction m3 = mult_by_m_endomorphism(b.model, 3);
        for (size_t k = 0; k < fr.mats.size(); ++k) {
            const RatMatrix ab = fr.mats[k] * m3.mats[k];
            const RatMatrix ba = m3.mats[k] * fr.mats[k];
            for (Eigen::Index i = 0; i < ab.rows(); ++i)
                for (Eigen::Index j = 0; j < ab.cols(); ++j) CHECK(ab(i, j) == ba(i, j));
        }
    }
}

TEST_CASE("synthetic probes") {
    const ModelBundle syn = synthetic_nonsemisimple_bundle();
    const CorrespondenceAction* s = syn.find("synthetic");
    REQUIRE(s != nullptr);
    CHECK(validate_model(*syn.model).ok());
    const BNumbers b = b_numbers(*s, 1);
    CHECK(b.b_coh == 2);
    CHECK(b.b_alg == 1);
    CHECK_FALSE(is_semisimple(*s, 2));
}
