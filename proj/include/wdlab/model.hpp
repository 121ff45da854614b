#pragma once

// Graded cohomology ring models: dimensions per degree, cup structure
// constants, the integration functional, Poincare pairings and dual bases,
// the ample class, and designated algebraic subspaces per even degree.
//
// Algebraic subspaces are coordinate subspaces: sorted index lists into the
// degree-2j basis. Constructors choose bases in which that is possible.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wdlab/exact.hpp"

namespace wdlab {

struct VarietyModel {
    int n = 0;                                        // variety dimension
    std::vector<Eigen::Index> dims;                   // d_0..d_{2n}
    std::vector<std::vector<std::string>> labels;     // basis labels per degree
    std::vector<std::vector<RatMatrix>> cup;          // cup[k][l]: (d_k*d_l) x d_{k+l}
    RatVector integrate;                              // functional on H^{2n}
    RatVector ample;                                  // h in H^2 (empty when n = 0)
    std::vector<std::vector<Eigen::Index>> algebraic; // A^j indices, j = 0..n
    std::optional<long long> q;                       // base-field cardinality, if any

    Eigen::Index dim(int k) const {
        return (k >= 0 && k <= 2 * n) ? dims[static_cast<size_t>(k)] : 0;
    }
    const RatMatrix& cup_block(int k, int l) const { return cup[static_cast<size_t>(k)][static_cast<size_t>(l)]; }
    RatMatrix& cup_block(int k, int l) { return cup[static_cast<size_t>(k)][static_cast<size_t>(l)]; }
    Eigen::Index algebraic_dim(int j) const { return static_cast<Eigen::Index>(algebraic[static_cast<size_t>(j)].size()); }
};

using ModelPtr = std::shared_ptr<const VarietyModel>;

struct GradedVector {
    int degree = 0;
    RatVector coords;
};

/// Allocates zeroed cup blocks for every k+l <= 2n given n and dims.
void allocate_cup_blocks(VarietyModel& m);

GradedVector graded_zero(const VarietyModel& m, int degree);
GradedVector graded_unit(const VarietyModel& m);  // the basis vector of H^0

/// Exact cup product; throws DegreeError when degrees overflow 2n.
GradedVector cup_product(const VarietyModel& m, const GradedVector& a, const GradedVector& b);

/// Integration of a top-degree class.
Rational integrate_top(const VarietyModel& m, const GradedVector& v);

/// Poincare pairing matrix P[i][j] = integrate(v_i^{(k)} cup v_j^{(2n-k)}).
RatMatrix pairing_matrix(const VarietyModel& m, int k);

/// w_1..w_{d_k} in H^{2n-k} with integrate(v_i cup w_j) = delta_ij, exact.
/// Throws ModelError when the pairing is singular.
std::vector<GradedVector> dual_basis(const VarietyModel& m, int k);

/// h^j by repeated cup; h^0 is the unit class.
GradedVector ample_power(const VarietyModel& m, int j);

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

/// Checks every model invariant exactly; failures are report entries with
/// witnesses, never exceptions.
ValidationReport validate_model(const VarietyModel& m);

/// The one-point model (n = 0); the unit of the Kunneth product.
VarietyModel point_model();

/// Columns are the unit vectors of the A^j index set inside H^{2j}.
RatMatrix algebraic_basis(const VarietyModel& m, int j);

}  // namespace wdlab
