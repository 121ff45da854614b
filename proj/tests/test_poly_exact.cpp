#include <doctest.h>

#include "support.hpp"
#include "wdlab/exact.hpp"

using namespace wdlab;
using testsupport::cofactor_charpoly;
using testsupport::naive_rank;
using testsupport::random_int_matrix;

namespace {

RatPoly make_poly(std::initializer_list<long long> ascending) {
    std::vector<Rational> c;
    for (long long v : ascending) c.emplace_back(v);
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const RatPoly x = RatPoly::x();
    const RatPoly p = (x - RatPoly::constant(Rational(1))) * (x + RatPoly::constant(Rational(1)));
    CHECK(p == make_poly({-1, 0, 1}));
    CHECK(p.degree() == 2);
    CHECK(p(Rational(2)) == 3);

    RatPoly q, r;
    RatPoly::divmod(p, x - RatPoly::constant(Rational(1)), q, r);
    CHECK(q == x + RatPoly::constant(Rational(1)));
    CHECK(r.is_zero());

    CHECK(p.derivative() == make_poly({0, 2}));
    CHECK_THROWS_AS(p / RatPoly(), DomainError);
}

TEST_CASE("poly_gcd and squarefree decomposition") {
    const RatPoly x = RatPoly::x();
    const RatPoly one = RatPoly::constant(Rational(1));
    const RatPoly a = (x - one).pow(2) * (x + RatPoly::constant(Rational(2)));
    const RatPoly b = (x - one) * (x + RatPoly::constant(Rational(3)));
    CHECK(poly_gcd(a, b) == x - one);

    const auto parts = squarefree_decomposition(a);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[0].factor == x + RatPoly::constant(Rational(2)));
    CHECK(parts[1].multiplicity == 2);
    CHECK(parts[1].factor == x - one);
}

TEST_CASE("charpoly: identity and companion") {
    CHECK(charpoly(rat_identity(2)) == make_poly({1, -2, 1}));  // (x-1)^2

    // companion of x^2 - a x + q reproduces its defining polynomial
    const RatPoly p = make_poly({7, -3, 1});  // x^2 - 3x + 7
    CHECK(charpoly(companion_matrix(p)) == p);
}

TEST_CASE("charpoly matches the cofactor-expansion oracle on random 4x4") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        const RatMatrix m = random_int_matrix(rng, 4);
        CHECK(charpoly(m) == cofactor_charpoly(m));
    }
}

TEST_CASE("Cayley-Hamilton holds exactly") {
    std::mt19937 rng(7);
    for (Eigen::Index n = 1; n <= 6; ++n) {
        const RatMatrix m = random_int_matrix(rng, n);
        const RatMatrix z = charpoly(m)(m);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) CHECK(z(i, j) == 0);
    }
}

TEST_CASE("minpoly: scalar matrix and Jordan block") {
    CHECK(minpoly(rat_identity(2)) == make_poly({-1, 1}));                  // x - 1
    CHECK(minpoly(jordan_block(Rational(1), 2)) == make_poly({1, -2, 1}));  // (x-1)^2
}

TEST_CASE("minpoly annihilates exactly and divides charpoly") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        const RatMatrix m = random_int_matrix(rng, 5);
        const RatPoly mp = minpoly(m);
        const RatMatrix z = mp(m);
        for (Eigen::Index i = 0; i < 5; ++i)
            for (Eigen::Index j = 0; j < 5; ++j) CHECK(z(i, j) == 0);
        CHECK(mp.divides(charpoly(m)));
    }
    // block-diagonal with a repeated block: minpoly strictly smaller than charpoly
    RatMatrix two = RatMatrix::Zero(4, 4);
    two.block(0, 0, 2, 2) = companion_matrix(make_poly({5, -2, 1}));
    two.block(2, 2, 2, 2) = companion_matrix(make_poly({5, -2, 1}));
    CHECK(minpoly(two) == make_poly({5, -2, 1}));
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(make_poly({-1, 1})));           // x - 1
    CHECK_FALSE(is_squarefree(make_poly({1, -2, 1})));  // (x-1)^2
    // x^2 - x + 1/4 = (x - 1/2)^2
    const RatPoly half = RatPoly({Rational(-1, 2), Rational(1)});
    const RatPoly p = half * half;
    CHECK(p == RatPoly({Rational(1, 4), Rational(-1), Rational(1)}));
    CHECK_FALSE(is_squarefree(p));
    CHECK_THROWS_AS(is_squarefree(RatPoly()), DomainError);
}

TEST_CASE("exact rank, determinant, inverse, solve") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const RatMatrix m = random_int_matrix(rng, 5);
        CHECK(exact_rank(m) == naive_rank(m));
    }
    RatMatrix sing(3, 3);
    sing << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6),
        Rational(0), Rational(1), Rational(1);
    CHECK(exact_rank(sing) == 2);
    CHECK(exact_det(sing) == 0);

    RatMatrix m(3, 3);
    m << Rational(2), Rational(1), Rational(0), Rational(1, 2), Rational(1), Rational(1),
        Rational(0), Rational(3), Rational(1);
    const RatPoly cp = cofactor_charpoly(m);
    CHECK(exact_det(m) == cp(Rational(0)) * (3 % 2 == 1 ? -1 : 1));  // det = (-1)^n p(0)
    const RatMatrix inv = exact_inverse(m);
    const RatMatrix prod = m * inv;
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) CHECK(prod(i, j) == (i == j ? 1 : 0));

    const RatVector b = m.col(1);
    const auto x = exact_solve(m, b);
    REQUIRE(x.has_value());
    const RatVector back = m * *x;
    for (Eigen::Index i = 0; i < 3; ++i) CHECK(back(i) == b(i));

    CHECK_THROWS_AS(exact_det(RatMatrix::Zero(2, 3)), DimensionError);
    CHECK_THROWS_AS(exact_inverse(sing), ModelError);
}

TEST_CASE("non-square inputs are rejected") {
    CHECK_THROWS_AS(charpoly(RatMatrix::Zero(2, 3)), DimensionError);
    CHECK_THROWS_AS(minpoly(RatMatrix::Zero(2, 3)), DimensionError);
}
