#pragma once

// Dense univariate polynomials over the exact rationals, ascending degree.

#include <vector>

#include "wdlab/rational.hpp"

namespace wdlab {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static RatPoly constant(const Rational& a) { return RatPoly({a}); }
    static RatPoly x() { return RatPoly({Rational(0), Rational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& s) const;
    RatPoly operator-() const { return *this * Rational(-1); }

    RatPoly monic() const;
    RatPoly derivative() const;
    RatPoly pow(unsigned e) const;

    /// Exact Euclidean division; throws DomainError on zero divisor.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    RatPoly operator/(const RatPoly& o) const;
    RatPoly operator%(const RatPoly& o) const;
    bool divides(const RatPoly& a) const;  // *this | a

    Rational operator()(const Rational& x) const;
    Complex operator()(const Complex& x) const;
    /// Horner evaluation with a square matrix argument (exact).
    RatMatrix operator()(const RatMatrix& m) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

/// Monic gcd over the rationals; gcd(0,0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// Integer-cleared, content-free image of p with positive leading coefficient.
/// Returns the integer coefficients; p = (unit) * primitive up to a rational scalar.
std::vector<Integer> primitive_integer_coeffs(const RatPoly& p);

/// Yun's squarefree decomposition: p = lc * prod parts[i].factor^parts[i].multiplicity,
/// the factors monic, squarefree and pairwise coprime, multiplicities strictly increasing.
struct SquarefreePart {
    RatPoly factor;
    int multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const RatPoly& p);

}  // namespace wdlab
