#pragma once

// Exact scalar layer: arbitrary-precision rationals (GMP-backed) plugged into
// Eigen dense types, plus the handful of conversions the numeric layer needs.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

#include "wdlab/errors.hpp"

namespace wdlab {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using RatMatrix  = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector  = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using CplxMatrix = Eigen::MatrixXcd;
using CplxVector = Eigen::VectorXcd;

using Complex = std::complex<double>;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Natural log of a positive integer, safe far outside double range.
inline double int_log(const Integer& n) {
    if (n <= 0) throw DomainError("int_log: argument must be positive");
    const unsigned bits = static_cast<unsigned>(msb(n));  // floor(log2 n)
    if (bits <= 900) return std::log(n.convert_to<double>());
    const unsigned shift = bits - 64;
    const Integer top = n >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

/// Natural log of a positive rational.
inline double rat_log(const Rational& r) {
    if (r <= 0) throw DomainError("rat_log: argument must be positive");
    return int_log(rat_num(r)) - int_log(rat_den(r));
}

/// Canonical "num/den" form, lowest terms, positive denominator ("3/1", "-1/2").
inline std::string rat_to_string(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Accepts "num/den" or a bare integer string.
inline Rational rat_from_string(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        const Integer num(s.substr(0, slash));
        const Integer den(s.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational literal: '" + s + "'");
    }
}

/// Exact conversion; every finite double is a dyadic rational.
inline Rational rat_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("rat_from_double: non-finite input");
    return Rational(x);
}

inline RatMatrix rat_identity(Eigen::Index n) {
    return RatMatrix::Identity(n, n);
}

inline CplxMatrix to_complex(const RatMatrix& m) {
    CplxMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Complex(to_double(m(i, j)), 0.0);
    return out;
}

inline RatMatrix rat_pow(const RatMatrix& m, unsigned e) {
    if (m.rows() != m.cols()) throw DimensionError("rat_pow: matrix must be square");
    RatMatrix acc = rat_identity(m.rows());
    RatMatrix base = m;
    while (e > 0) {
        if (e & 1u) acc = (acc * base).eval();
        base = (base * base).eval();
        e >>= 1u;
    }
    return acc;
}

inline double max_abs(const CplxMatrix& m) {
    double v = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
    return v;
}

}  // namespace wdlab
