#include "wdlab/poly.hpp"

#include <sstream>

namespace wdlab {

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const Rational& s) const {
    if (s == 0) return RatPoly();
    std::vector<Rational> out(c_);
    for (auto& v : out) v *= s;
    return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return RatPoly();
    return *this * (Rational(1) / leading());
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    return RatPoly(std::move(out));
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly acc = RatPoly::constant(Rational(1));
    RatPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem(a.c_);
    const int db = b.degree();
    const Rational lead = b.leading();
    std::vector<Rational> quot;
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= db) {
        if (static_cast<int>(quot.size()) < dr - db + 1) quot.resize(dr - db + 1, Rational(0));
        const Rational f = rem[dr] / lead;
        quot[dr - db] = f;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
        rem[dr] = 0;  // kill rounding-free leftover exactly
        while (dr >= 0 && (dr >= static_cast<int>(rem.size()) || rem[dr] == 0)) --dr;
    }
    rem.resize(dr + 1);
    q = RatPoly(std::move(quot));
    r = RatPoly(std::move(rem));
}

RatPoly RatPoly::operator/(const RatPoly& o) const {
    RatPoly q, r;
    divmod(*this, o, q, r);
    return q;
}

RatPoly RatPoly::operator%(const RatPoly& o) const {
    RatPoly q, r;
    divmod(*this, o, q, r);
    return r;
}

bool RatPoly::divides(const RatPoly& a) const {
    if (is_zero()) return a.is_zero();
    return (a % *this).is_zero();
}

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex RatPoly::operator()(const Complex& x) const {
    Complex acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

RatMatrix RatPoly::operator()(const RatMatrix& m) const {
    if (m.rows() != m.cols()) throw DimensionError("polynomial of a non-square matrix");
    const Eigen::Index n = m.rows();
    RatMatrix acc = RatMatrix::Zero(n, n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = (acc * m).eval();
        acc += *it * rat_identity(n);
    }
    return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        const Rational mag = rat_abs(a);
        const bool unit = (mag == 1);
        if (i == 0 || !unit) {
            os << rat_num(mag).str();
            if (rat_den(mag) != 1) os << "/" << rat_den(mag).str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a % b;
        a = std::move(b);
        b = r.monic();  // keep coefficients small, gcd defined up to units
    }
    return a.monic();
}

std::vector<Integer> primitive_integer_coeffs(const RatPoly& p) {
    if (p.is_zero()) return {};
    Integer den_lcm(1);
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, rat_den(c));
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer content(0);
    for (const auto& c : p.coeffs()) {
        const Rational scaled = c * Rational(den_lcm);
        out.push_back(rat_num(scaled));
        content = gcd(content, out.back());
    }
    if (content == 0) content = 1;
    if (out.back() < 0) content = -content;
    for (auto& v : out) v /= content;
    return out;
}

std::vector<SquarefreePart> squarefree_decomposition(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreePart> parts;
    RatPoly f = p.monic();
    if (f.degree() == 0) return parts;
    // Yun's algorithm (characteristic zero).
    RatPoly fp = f.derivative();
    RatPoly a = poly_gcd(f, fp);
    RatPoly b = f / a;
    RatPoly c = fp / a;
    RatPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RatPoly g = poly_gcd(b, d);
        if (g.degree() > 0) parts.push_back({g.monic(), i});
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return parts;
}

}  // namespace wdlab
