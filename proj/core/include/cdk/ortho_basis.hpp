#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cdk/measure.hpp"
#include "cdk/multi_index.hpp"

namespace cdk {

// Monomial z^{alpha(monomial_index)} that is linearly dependent on its
// predecessors on the support.  coeffs spans enumeration indices
// 0..monomial_index with leading coefficient 1; the polynomial
// sum_k coeffs[k] * z^{alpha(k)} vanishes on the atoms up to the rank
// tolerance.  Coefficients refer to the premapped coordinates (see below).
struct NullRecord {
    int monomial_index = -1;
    Eigen::VectorXcd coeffs;
};

// Orthonormal polynomial family p_0, ..., p_n for a discrete measure:
//   sum_i t_i p_j(z_i) conj(p_l(z_i)) = delta_{jl}.
//
// The family is built on an affinely normalized copy of the cloud (premap);
// coeff_columns expresses p_j in the monomials of the premapped coordinate
// z~ = premap.apply(z), and value_scale = sqrt(premap.mass_scale) converts
// the normalized family back to the family of the original measure:
//   p_j(z) = value_scale * sum_k coeff_columns(k, j) * z~^{alpha(k)}.
//
// Column j has its last nonzero entry at row degree_indices[j], and that
// leading coefficient is real and positive (upper echelon form).
struct OrthoBasis {
    MonomialOrdering ordering;
    int n = -1;                      // highest basis position, n+1 polynomials
    std::vector<int> degree_indices; // strictly increasing monomial indices k_j
    Eigen::MatrixXcd coeff_columns;  // (k_n + 1) x (n+1)
    std::vector<NullRecord> null_records;
    Eigen::MatrixXcd sample_values;  // N x (n+1), p_j at the original atoms
    MonomialTable table;             // monomials through k_n, premapped coords
    AffineMap premap;
    double value_scale = 1.0;
    double defect = 0.0;             // || V^* diag(t) V - I ||_2 at build time
    bool rank_exhausted = false;     // fewer than n_target+1 polynomials found

    // Column-major Hessenberg matrix H of the shift operator, present only
    // when the basis was produced by the univariate Arnoldi path:
    //   z * (p_0(z), ..., p_n(z)) = (p_0(z), ..., p_{n+1}(z)) * H
    // holds on the atoms in the original coordinate; H is (n+2) x (n+1) with
    // real positive subdiagonal.
    std::optional<Eigen::MatrixXcd> hessenberg;

    int dim() const { return premap.dim(); }

    // p_0(z), ..., p_n(z) at one point (length n+1).
    Eigen::VectorXcd evaluate(const Eigen::VectorXcd& z) const;
    // One row per point; points are rows of an M x d matrix.
    Eigen::MatrixXcd evaluate_rows(const Eigen::MatrixXcd& points) const;
};

struct OrthonormalizeOptions {
    // A monomial's residual after projection counts as zero when its norm is
    // below rank_tol times the monomial's own norm on the cloud.
    double rank_tol = 1e-8;
    // Re-orthogonalization passes of Gram-Schmidt (2 = classical twice).
    int passes = 2;
    // Scan at most scan_factor * (n_target + 1) monomials before giving up
    // and returning a shorter basis with rank_exhausted set.
    int scan_factor = 4;
    // Center and scale the cloud before orthogonalizing.  Disable only for
    // controlled comparisons; results represent the same polynomials either
    // way, but conditioning suffers on raw data.
    bool normalize = true;
};

// Builds p_0..p_{n_target} by weighted Gram-Schmidt over the monomial scan,
// skipping monomials that are dependent on the support (each one recorded as
// a NullRecord).  Requires n_target + 1 <= number of atoms.  If the scan
// bound or the ordering capacity is hit first, returns the shorter family
// with rank_exhausted = true instead of throwing.
OrthoBasis orthonormalize(const DiscreteMeasure& measure,
                          const MonomialOrdering& ordering, int n_target,
                          const OrthonormalizeOptions& opts = {});

// || V^* diag(t) V - I ||_2 recomputed from sample values; V(i, j) = p_j(z_i).
double orthogonality_defect(const OrthoBasis& basis, const DiscreteMeasure& measure);

} // namespace cdk
