#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wdlab/roots.hpp"

using namespace wdlab;
using testsupport::naive_rank;
using testsupport::random_int_matrix;

namespace {

RatPoly make_poly(std::initializer_list<long long> ascending) {
    std::vector<Rational> c;
    for (long long v : ascending) c.emplace_back(v);
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("factor_over_rationals: quadratics") {
    const auto split = factor_over_rationals(make_poly({-1, 0, 1}));  // x^2 - 1
    REQUIRE(split.size() == 2);
    CHECK(split[0].factor == make_poly({-1, 1}));
    CHECK(split[1].factor == make_poly({1, 1}));
    CHECK(split[0].multiplicity == 1);

    const auto irr = factor_over_rationals(make_poly({1, 0, 1}));  // x^2 + 1
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].factor == make_poly({1, 0, 1}));
}

TEST_CASE("factor_over_rationals: block-diagonal matrix with chosen factors") {
    // blocks with charpolys (x^2+1), (x-2), (x+3)
    RatMatrix m = RatMatrix::Zero(4, 4);
    m.block(0, 0, 2, 2) = companion_matrix(make_poly({1, 0, 1}));
    m(2, 2) = 2;
    m(3, 3) = -3;
    const auto fs = factor_over_rationals(charpoly(m));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].factor == make_poly({-2, 1}));
    CHECK(fs[1].factor == make_poly({3, 1}));
    CHECK(fs[2].factor == make_poly({1, 0, 1}));
    for (const auto& f : fs) CHECK(f.multiplicity == 1);
}

TEST_CASE("factor_over_rationals: multiplicities and rational roots") {
    const RatPoly p = make_poly({1, -2, 1}) * make_poly({1, 0, 1});  // (x-1)^2 (x^2+1)
    const auto fs = factor_over_rationals(p);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == make_poly({-1, 1}));
    CHECK(fs[0].multiplicity == 2);
    CHECK(fs[1].factor == make_poly({1, 0, 1}));
    CHECK(fs[1].multiplicity == 1);

    // rational (non-integer) root
    const RatPoly q = RatPoly({Rational(-1, 2), Rational(1)}) * make_poly({1, 1});
    const auto gs = factor_over_rationals(q);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].factor == RatPoly({Rational(-1, 2), Rational(1)}));

    CHECK_THROWS_AS(factor_over_rationals(RatPoly()), DomainError);
    CHECK(factor_over_rationals(RatPoly::constant(Rational(7))).empty());
}

TEST_CASE("factorization reassembles the input") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        const RatMatrix m = random_int_matrix(rng, 5, 2);
        const RatPoly p = charpoly(m);
        RatPoly prod = RatPoly::constant(p.leading());
        for (const auto& f : factor_over_rationals(p))
            prod = prod * f.factor.pow(static_cast<unsigned>(f.multiplicity));
        CHECK(prod == p);
    }
}

TEST_CASE("eigenvalues_approx: diagonal, golden ratio, Vieta") {
    RatMatrix d = RatMatrix::Zero(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 3;
    auto ev = eigenvalues_approx(d);
    REQUIRE(ev.values.size() == 2);
    std::sort(ev.values.begin(), ev.values.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(std::abs(ev.values[0] - Complex(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(ev.values[1] - Complex(3.0, 0.0)) < 1e-12);

    // x^2 - x - 1: golden ratio pair
    const auto golden = eigenvalues_approx(companion_matrix(make_poly({-1, -1, 1})));
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    double lo = 1e9, hi = -1e9;
    for (auto z : golden.values) {
        lo = std::min(lo, z.real());
        hi = std::max(hi, z.real());
        CHECK(std::abs(z.imag()) < 1e-12);
    }
    CHECK(hi == doctest::Approx(phi).epsilon(1e-12));
    CHECK(lo == doctest::Approx(1.0 - phi).epsilon(1e-12));

    // counted-curve companion: conjugate pair with product q, sum a (Vieta)
    const auto pair = eigenvalues_approx(companion_matrix(make_poly({5, 3, 1})));  // x^2+3x+5
    const Complex sum = pair.values[0] + pair.values[1];
    const Complex prod = pair.values[0] * pair.values[1];
    CHECK(std::abs(sum - Complex(-3, 0)) < 1e-10);
    CHECK(std::abs(prod - Complex(5, 0)) < 1e-10);
}

TEST_CASE("eigenvalue products match charpoly coefficients within tolerance") {
    std::mt19937 rng(31);
    const RatMatrix m = random_int_matrix(rng, 5, 2);
    const auto ev = eigenvalues_approx(m);
    const RatPoly p = charpoly(m);
    // multiply out prod (x - lambda_i) and compare coefficient-wise
    std::vector<Complex> coeffs = {Complex(1, 0)};
    for (const auto& z : ev.values) {
        std::vector<Complex> next(coeffs.size() + 1, Complex(0, 0));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= z * coeffs[i];
        }
        coeffs = std::move(next);
    }
    double scale = 0.0;
    for (int i = 0; i <= p.degree(); ++i) scale = std::max(scale, std::abs(to_double(p.coeff(i))));
    for (int i = 0; i <= p.degree(); ++i)
        CHECK(std::abs(coeffs[static_cast<size_t>(i)] - Complex(to_double(p.coeff(i)), 0)) <=
              1e-9 * scale);
}

TEST_CASE("spectral_radius: Jordan blocks, zero, iterate-norm oracle") {
    CHECK(spectral_radius(jordan_block(Rational(-7, 2), 4)) == doctest::Approx(3.5).epsilon(1e-12));
    CHECK(spectral_radius(RatMatrix(RatMatrix::Zero(3, 3))) == 0.0);
    // nilpotent but not zero
    CHECK(spectral_radius(jordan_block(Rational(0), 3)) == 0.0);

    std::mt19937 rng(17);
    const RatMatrix m = random_int_matrix(rng, 3, 3);
    const double sp = spectral_radius(m);
    // Gelfand oracle: ||M^t||_{L1}^{1/t} at t = 60
    RatMatrix power = m;
    for (int t = 1; t < 60; ++t) power = (power * m).eval();
    Rational norm(0);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) norm += rat_abs(power(i, j));
    const double root = std::exp(rat_log(norm) / 60.0);
    CHECK(std::abs(root - sp) <= 0.05 * std::max(1.0, sp));
}

TEST_CASE("jordan_profile: diagonal and constructed blocks") {
    RatMatrix d = RatMatrix::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = 2;
    const auto dp = jordan_profile(d);
    REQUIRE(dp.factors.size() == 2);
    CHECK(dp.factors[0].block_sizes == std::vector<int>{1});
    CHECK(dp.factors[1].block_sizes == std::vector<int>{1});
    CHECK(dp.max_block_at_max_modulus == 1);
    CHECK(dp.max_modulus == doctest::Approx(2.0));

    // J(1,2) + J(1,1): factor (x-1) with blocks {2,1}
    RatMatrix j = RatMatrix::Zero(3, 3);
    j.block(0, 0, 2, 2) = jordan_block(Rational(1), 2);
    j(2, 2) = 1;
    const auto jp = jordan_profile(j);
    REQUIRE(jp.factors.size() == 1);
    CHECK(jp.factors[0].block_sizes == std::vector<int>{2, 1});
    CHECK(jp.max_block_at_max_modulus == 2);
    CHECK_FALSE(jp.semisimple());
}

TEST_CASE("jordan_profile: companion of (x^2+1)^2 against the rank oracle") {
    const RatPoly f = make_poly({1, 0, 1});
    const RatMatrix m = companion_matrix(f * f);
    const auto profile = jordan_profile(m);
    REQUIRE(profile.factors.size() == 1);
    CHECK(profile.factors[0].factor == f);
    CHECK(profile.factors[0].block_sizes == std::vector<int>{2});

    // oracle: rank sequence of f(M)^k computed with the independent elimination
    const RatMatrix b = f(m);
    CHECK(naive_rank(b) == 2);                  // one block of size >= 1: (4-2)/2 = 1
    CHECK(naive_rank((b * b).eval()) == 0);     // blocks of size >= 2: (2-0)/2 = 1
    CHECK(profile.max_block_at_max_modulus == 2);
    CHECK(profile.max_modulus == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("jordan_profile dimension accounting and semisimplicity agreement") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
        const RatMatrix m = random_int_matrix(rng, n, 2);
        const auto profile = jordan_profile(m);
        Eigen::Index total = 0;
        for (const auto& f : profile.factors) {
            Eigen::Index blocks = 0;
            for (int b : f.block_sizes) blocks += b;
            total += blocks * f.factor.degree();
        }
        CHECK(total == n);
        CHECK(profile.semisimple() == is_squarefree(minpoly(m)));
    }
}
