#pragma once

// Product constructions: the Kunneth model of a product of two models (Koszul
// signs fixed once) and full exterior-algebra models over an even-dimensional
// H^1 with a nondegenerate alternating form.

#include "wdlab/model.hpp"

namespace wdlab {

/// Basis position of a_i^{(k)} (x) b_j^{(l)} inside product degree k+l:
/// components ordered by ascending k, then row-major (i, j).
Eigen::Index kunneth_index(const VarietyModel& a, const VarietyModel& b, int k, int l,
                           Eigen::Index i, Eigen::Index j);

/// Graded tensor product model; ample is h_A (x) 1 + 1 (x) h_B, algebraic
/// subspaces are the index sets of A_A^i (x) A_B^{j-i}. q is kept when both
/// factors agree on it.
VarietyModel kunneth(const VarietyModel& a, const VarietyModel& b);

/// Degreewise matrices of the product action fA (x) fB on the Kunneth model.
std::vector<RatMatrix> kunneth_action_matrices(const VarietyModel& a, const VarietyModel& b,
                                               const std::vector<RatMatrix>& fa,
                                               const std::vector<RatMatrix>& fb);

/// Exterior algebra on H^1 of dimension 2g with alternating pairing `omega`:
/// dims C(2g, k), cup = wedge, integrate normalized by the Pfaffian so that
/// integrate(h^g) = g! * Pf(omega)^2 > 0, ample h = sum omega_ij e_i^e_j.
/// Algebraic subspaces: unions of symplectic pairs when omega is the standard
/// block form, every index otherwise.
/// Throws ModelError on odd dimension or a degenerate/non-alternating form.
VarietyModel exterior_model(const RatMatrix& omega,
                            const std::vector<std::string>& h1_labels = {});

/// Basis subsets of {0..2g-1} of size k, lexicographic; the exterior basis order.
std::vector<std::vector<int>> exterior_subsets(int two_g, int k);

/// Degreewise matrices of the functorial extension of an H^1 action
/// (entry [S,T] of degree k is the minor det(h1[S,T])).
std::vector<RatMatrix> exterior_action_matrices(int two_g, const RatMatrix& h1);

}  // namespace wdlab
