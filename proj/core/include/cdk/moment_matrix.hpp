#pragma once

#include <Eigen/Dense>

#include "cdk/measure.hpp"
#include "cdk/multi_index.hpp"

namespace cdk {

// Hermitian positive semidefinite matrix of monomial inner products through
// enumeration index k:
//   entries(j, l) = sum_i t_i * z_i^{alpha(l)} * conj(z_i^{alpha(j)}).
struct MomentMatrix {
    Eigen::MatrixXcd entries; // (k+1) x (k+1)
    MonomialOrdering ordering;
    int k = 0;
};

MomentMatrix build_moment_matrix(const DiscreteMeasure& measure,
                                 const MonomialOrdering& ordering, int k);

// Rank of a Hermitian PSD matrix with a relative eigenvalue threshold.
int hermitian_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-10);

} // namespace cdk
