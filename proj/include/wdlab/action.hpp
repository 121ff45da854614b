#pragma once

// Correspondences as graded pullback actions on a model: dual-basis L1 norms,
// Poincare transposes, composition (contravariant order: compose(f,g) acts as
// g^* o f^* degreewise), and iterate-norm sequences.

#include "wdlab/model.hpp"

namespace wdlab {

struct CorrespondenceAction {
    ModelPtr model;
    std::vector<RatMatrix> mats;  // M_k acting on H^k, k = 0..2n, column-vector convention
    bool is_ring_map = false;
    std::optional<Rational> polarization;  // a with M_2 h = a h, a > 1
};

/// Validating constructor. Checks shapes, M_0 = (1) for ring maps, block
/// preservation of every A^j and of its coordinate complement, and the
/// polarization identity. Throws ActionError.
CorrespondenceAction make_action(ModelPtr model, std::vector<RatMatrix> mats, bool is_ring_map,
                                 std::optional<Rational> polarization = std::nullopt);

CorrespondenceAction identity_action(ModelPtr model);

/// ||f^*|_{H^k}|| = sum_{i,j} |integrate(M_k v_i cup w_j)| over the model
/// basis v and its dual basis w; exact.
Rational norm_H(const CorrespondenceAction& f, int k);

/// Same recipe inside A^j with the induced pairing (dual basis in A^{n-j}).
Rational norm_N(const CorrespondenceAction& f, int j);

/// deg_j(f) = integrate(M_{2j} h^j cup h^{n-j}).
Rational deg_j(const CorrespondenceAction& f, int j);

struct NormTable {
    std::vector<Rational> h_norms;  // per degree 0..2n
    std::vector<Rational> n_norms;  // per level 0..n
    std::vector<Rational> degrees;  // deg_j per level
};
NormTable norm_table(const CorrespondenceAction& f);

/// Poincare-pairing adjoint, realized degreewise from the pairing matrices:
/// integrate(f_tau x cup y) = integrate(x cup f^* y). Exact involution.
CorrespondenceAction transpose(const CorrespondenceAction& f);

/// Degreewise matrix product in contravariant order; ring-map flag survives
/// conjunction, polarizations multiply. Throws CompositionError on model mismatch.
CorrespondenceAction compose(const CorrespondenceAction& f, const CorrespondenceAction& g);

/// Matrix of M_{2j} restricted to A^j in the A^j index basis.
RatMatrix restriction_to_algebraic(const CorrespondenceAction& f, int j);

/// Exact norms of matrix powers t = 1..T.
std::vector<Rational> iterate_norms_H(const CorrespondenceAction& f, int k, int T);
std::vector<Rational> iterate_norms_N(const CorrespondenceAction& f, int j, int T);

/// t-th roots of a norm sequence (log-domain, safe for huge exact norms).
std::vector<double> root_sequence(const std::vector<Rational>& norms);

}  // namespace wdlab
