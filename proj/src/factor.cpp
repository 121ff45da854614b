#include "wdlab/factor.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <map>

namespace wdlab {

namespace {

constexpr size_t kComboCap = 2'000'000;  // Kronecker divisor-tuple budget per degree

// ---------------------------------------------------------------------------
// mod-p polynomial arithmetic (coefficients ascending, reduced in [0, p)).

using ModPoly = std::vector<long long>;

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long mod_inv(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        const long long q = r / nr;
        const long long t2 = t - q * nt;
        t = nt;
        nt = t2;
        const long long r2 = r - q * nr;
        r = nr;
        nr = r2;
    }
    return t < 0 ? t + p : t;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    mp_trim(out);
    return out;
}

ModPoly mp_mod(ModPoly a, const ModPoly& f, long long p) {
    const long long inv_lead = mod_inv(f.back(), p);
    while (a.size() >= f.size()) {
        const long long c = a.back() * inv_lead % p;
        const size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
        mp_trim(a);
    }
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long long p) {
    while (!b.empty()) {
        ModPoly r = mp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const long long inv = mod_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

ModPoly mp_derivative(const ModPoly& a, long long p) {
    if (a.size() <= 1) return {};
    ModPoly out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = static_cast<long long>(i % p) * a[i] % p;
    mp_trim(out);
    return out;
}

// x^(p^d) mod f, iterated Frobenius by repeated x^p.
ModPoly mp_xpow_p(const ModPoly& base, const ModPoly& f, long long p) {
    // base^p mod f by square-and-multiply over the exponent p.
    ModPoly acc = {1};
    ModPoly sq = base;
    long long e = p;
    while (e > 0) {
        if (e & 1) acc = mp_mod(mp_mul(acc, sq, p), f, p);
        sq = mp_mod(mp_mul(sq, sq, p), f, p);
        e >>= 1;
    }
    return acc;
}

// Degrees of the irreducible factors of a squarefree monic f mod p (with
// multiplicity as a multiset); empty optional when p is unusable.
std::optional<std::vector<int>> modp_factor_degrees(const std::vector<Integer>& coeffs, long long p) {
    ModPoly f(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Integer c = coeffs[i] % p;
        if (c < 0) c += p;
        f[i] = c.convert_to<long long>();
    }
    if (f.back() == 0) return std::nullopt;  // degree dropped
    const long long inv = mod_inv(f.back(), p);
    for (auto& c : f) c = c * inv % p;
    if (mp_gcd(f, mp_derivative(f, p), p).size() != 1) return std::nullopt;  // not squarefree mod p

    std::vector<int> degrees;
    ModPoly h = {0, 1};  // x
    int d = 0;
    while (static_cast<int>(f.size()) - 1 > 2 * d) {
        ++d;
        h = mp_xpow_p(h, f, p);
        ModPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = ((hx[1] - 1) % p + p) % p;  // h - x
        mp_trim(hx);
        ModPoly g = mp_gcd(f, hx, p);
        if (g.size() > 1) {
            const int found = static_cast<int>(g.size()) - 1;
            for (int i = 0; i < found / d; ++i) degrees.push_back(d);
            // f /= g (exact mod p)
            ModPoly q;
            ModPoly rem = f;
            const long long gi = mod_inv(g.back(), p);
            q.assign(f.size() - g.size() + 1, 0);
            for (int k = static_cast<int>(rem.size()) - static_cast<int>(g.size()); k >= 0; --k) {
                const long long c = rem[k + g.size() - 1] * gi % p;
                q[k] = c;
                if (c != 0)
                    for (size_t i = 0; i < g.size(); ++i)
                        rem[k + i] = ((rem[k + i] - c * g[i]) % p + p) % p;
            }
            f = std::move(q);
            mp_trim(f);
            h = mp_mod(h, f, p);
        }
    }
    if (f.size() > 2) degrees.push_back(static_cast<int>(f.size()) - 1);
    return degrees;
}

// Factor degrees achievable over Q: subset sums of the mod-p degree multiset,
// intersected over a few primes. Index 0 of the bitset is unused.
std::bitset<128> allowed_factor_degrees(const std::vector<Integer>& coeffs, int deg) {
    static constexpr std::array<long long, 10> kPrimes = {10007, 10009, 10037, 10039, 10061,
                                                          10067, 10069, 10079, 10091, 10093};
    std::bitset<128> allowed;
    for (int i = 1; i <= deg; ++i) allowed.set(i);
    int used = 0;
    for (long long p : kPrimes) {
        if (used >= 3) break;
        auto degs = modp_factor_degrees(coeffs, p);
        if (!degs) continue;
        ++used;
        std::bitset<128> sums;
        sums.set(0);
        for (int d : *degs) sums |= sums << d;
        sums.reset(0);
        allowed &= sums;
    }
    return allowed;
}

// ---------------------------------------------------------------------------
// Kronecker interpolation search.

std::vector<long long> sample_points(int count) {
    std::vector<long long> xs = {0};
    for (long long v = 1; static_cast<int>(xs.size()) < count; ++v) {
        xs.push_back(v);
        if (static_cast<int>(xs.size()) < count) xs.push_back(-v);
    }
    return xs;
}

Integer eval_integer(const std::vector<Integer>& coeffs, long long x) {
    Integer acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Lagrange basis polynomials for the given sample points.
std::vector<RatPoly> lagrange_basis(const std::vector<long long>& xs) {
    std::vector<RatPoly> basis;
    basis.reserve(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        RatPoly num = RatPoly::constant(Rational(1));
        Rational den(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = num * RatPoly({Rational(-xs[j]), Rational(1)});
            den *= Rational(xs[i] - xs[j]);
        }
        basis.push_back(num * (Rational(1) / den));
    }
    return basis;
}

// One factor of exact degree d of the squarefree primitive u, or nullopt.
std::optional<RatPoly> kronecker_search_degree(const RatPoly& u, int d) {
    const std::vector<Integer> coeffs = primitive_integer_coeffs(u);
    const auto xs = sample_points(d + 1);
    const auto basis = lagrange_basis(xs);

    std::vector<std::vector<Integer>> divs(xs.size());
    size_t combos = 1;
    for (size_t i = 0; i < xs.size(); ++i) {
        const Integer v = eval_integer(coeffs, xs[i]);
        divs[i] = positive_divisors(v, 50'000);
        combos *= divs[i].size() * (i == 0 ? 1 : 2);  // sign fixed at the first point
        if (combos > kComboCap)
            throw FactorizationError("Kronecker search exceeds the desk-scale budget at degree " +
                                     std::to_string(d));
    }

    std::vector<size_t> idx(xs.size(), 0);
    std::vector<int> sign(xs.size(), 1);
    while (true) {
        RatPoly g;
        for (size_t i = 0; i < xs.size(); ++i)
            g = g + basis[i] * Rational(sign[i] > 0 ? divs[i][idx[i]] : Integer(-divs[i][idx[i]]));
        if (g.degree() == d) {
            bool integral = true;
            for (const auto& c : g.coeffs())
                if (rat_den(c) != 1) { integral = false; break; }
            if (integral && g.divides(u)) return g.monic();
        }
        // mixed-radix increment over (index, sign) pairs; first sign stays +
        size_t pos = 0;
        while (pos < xs.size()) {
            if (pos > 0 && sign[pos] > 0) { sign[pos] = -1; break; }
            sign[pos] = 1;
            if (++idx[pos] < divs[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == xs.size()) return std::nullopt;
    }
}

// Irreducible monic factors of a squarefree monic polynomial with no rational
// roots, degrees restricted by the mod-p certificate.
void factor_squarefree_core(const RatPoly& u, std::vector<RatPoly>& out) {
    if (u.degree() <= 0) return;
    if (u.degree() == 1) { out.push_back(u.monic()); return; }
    const auto allowed = allowed_factor_degrees(primitive_integer_coeffs(u), u.degree());
    RatPoly rest = u.monic();
    int d = 2;  // degree-1 factors were already removed with the rational roots
    while (d <= rest.degree() / 2 && d <= 8) {
        if (!allowed.test(d)) { ++d; continue; }
        auto g = kronecker_search_degree(rest, d);
        if (g) {
            out.push_back(*g);
            rest = (rest / *g).monic();
            continue;  // same degree may divide again (distinct factor, equal degree)
        }
        ++d;
    }
    if (rest.degree() > 0) {
        // The degree-8 search bound is complete for degree <= 16; past that, a
        // mod-p-admissible split into unsearchable degrees cannot be ruled out.
        for (int k = 9; k <= rest.degree() / 2; ++k)
            if (allowed.test(k))
                throw FactorizationError(
                    "possible factor of degree " + std::to_string(k) +
                    " is beyond the degree-8 search bound; cannot certify irreducibility");
        out.push_back(rest.monic());
    }
}

std::vector<RatPoly> rational_roots_removed(RatPoly& u) {
    std::vector<RatPoly> linear;
    // x^k first
    while (u.degree() >= 1 && u.coeff(0) == 0) {
        u = u / RatPoly::x();
        linear.push_back(RatPoly::x());
    }
    if (u.degree() < 1) return linear;
    const auto coeffs = primitive_integer_coeffs(u);
    const auto ps = positive_divisors(coeffs.front());
    const auto qs = positive_divisors(coeffs.back());
    for (const auto& pn : ps) {
        for (const auto& qn : qs) {
            if (gcd(pn, qn) != 1) continue;
            for (int s : {1, -1}) {
                const Rational r = Rational(pn, qn) * s;
                while (u.degree() >= 1 && u(r) == 0) {
                    const RatPoly lin({-r, Rational(1)});
                    u = u / lin;
                    linear.push_back(lin);
                }
            }
        }
    }
    return linear;
}

}  // namespace

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<Integer> positive_divisors(Integer n, size_t cap) {
    if (n < 0) n = -n;
    if (n == 0) throw DomainError("divisors of zero are unbounded");
    std::map<Integer, int> fac;
    for (long long p = 2; p <= 1'000'000 && Integer(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) { ++fac[p]; n /= p; }
    }
    if (n > 1) {
        if (!is_probable_prime(n))
            throw FactorizationError("integer too hard to factor at desk scale: " + n.str());
        ++fac[n];
    }
    std::vector<Integer> divs = {1};
    for (const auto& [p, e] : fac) {
        const size_t base = divs.size();
        Integer pe(1);
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * pe);
                if (divs.size() > cap)
                    throw FactorizationError("divisor count exceeds the desk-scale budget");
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<IrreducibleFactor> factor_over_rationals(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
    std::vector<IrreducibleFactor> out;
    for (const auto& part : squarefree_decomposition(p)) {
        RatPoly u = part.factor;
        for (const auto& lin : rational_roots_removed(u)) out.push_back({lin, part.multiplicity});
        std::vector<RatPoly> irr;
        factor_squarefree_core(u, irr);
        for (auto& f : irr) out.push_back({std::move(f), part.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        for (int i = 0; i <= a.factor.degree(); ++i) {
            const Rational ca = a.factor.coeff(i), cb = b.factor.coeff(i);
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    return out;
}

}  // namespace wdlab
