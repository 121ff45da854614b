#pragma once

// Ground-truth model constructors and the brute-force point-counting oracle
// that feeds the elliptic and abelian-product models.

#include "wdlab/action.hpp"
#include "wdlab/products.hpp"

namespace wdlab {

struct CurveSpec {
    long long p;   // odd prime, 3 <= p < 10^4
    long long a4;  // y^2 = x^3 + a4 x + a6 over F_p
    long long a6;
};

struct CountResult {
    long long p;
    long long count;  // #E(F_p), point at infinity included
    long long trace;  // a = p + 1 - count; |a| <= 2 sqrt(p)
};

/// Exhaustive count via a squares-per-residue table; exact. Throws SpecError
/// for a non-prime p, p outside [3, 10^4), or a singular curve.
CountResult ec_point_count(const CurveSpec& c);

/// Independent oracle: the naive (x, y) double loop.
CountResult ec_point_count_naive(const CurveSpec& c);

/// A model together with its named actions ("identity", "frobenius", ...).
struct ModelBundle {
    ModelPtr model;
    std::vector<std::pair<std::string, CorrespondenceAction>> actions;

    const CorrespondenceAction* find(const std::string& name) const {
        for (const auto& [n, a] : actions)
            if (n == name) return &a;
        return nullptr;
    }
    void add(std::string name, CorrespondenceAction a) {
        actions.emplace_back(std::move(name), std::move(a));
    }
};

/// P^n over F_q: dims 1 in even degrees, truncated polynomial ring on h,
/// Frobenius q^j on H^{2j}, A^j = H^{2j}.
ModelBundle projective_space_model(int n, long long q);

/// dims (1,2,1), symplectic H^1, Frobenius = companion of x^2 - a x + q.
/// Throws SpecError when a^2 > 4q.
ModelBundle elliptic_model(long long q, long long a);

/// Runs the counting oracle, then builds elliptic_model(p, trace).
ModelBundle elliptic_model_from_curve(const CurveSpec& c);

/// Exterior algebra on the direct sum of the curves' H^1, Frobenius extended
/// functorially. All curves must share q. Throws SpecError on mixed q.
ModelBundle abelian_product_model(const std::vector<CountResult>& curves);

/// Kunneth product; actions present in both factors are tensored (polarization
/// kept when the factors agree on it).
ModelBundle kunneth_bundle(const ModelBundle& a, const ModelBundle& b);

/// m^k on H^k; polarization m^2. Requires the exterior dims pattern C(2n, k);
/// throws UnsupportedModelError otherwise.
CorrespondenceAction mult_by_m_endomorphism(const ModelPtr& model, long long m);

/// The shipped Proposition-1 probe: a graded map on an E x E Kunneth model with
/// a size-2 Jordan block at top modulus on H^2 but a scalar on A^1, so
/// b_coh = 2 while b_alg = 1. Returned bundle carries it as "synthetic".
ModelBundle synthetic_nonsemisimple_bundle();

/// A graded map scaling the transcendental part of H^2 by 2 while fixing A^1:
/// chi_2 = 2 but lambda_1 = 1, so the degree-comparison check must fail.
CorrespondenceAction synthetic_ddc_failure_action(const ModelBundle& exe);

}  // namespace wdlab
