#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cdk/kernel_engine.hpp"

namespace cdk {

// Leverage score of atom j: tau_j = t_j * K_n(z_j, z_j), the atom's weight
// in the degree-n polynomial space.  Scores lie in (0, 1] and sum to n + 1
// (the dimension of the space) up to the orthogonality defect.
struct LeverageReport {
    Eigen::VectorXd scores;             // one per atom
    double sum = 0;                     // = n + 1 up to defect
    double threshold = 0;               // applied flagging threshold
    std::vector<Eigen::Index> flagged;  // indices with score > threshold
};

// threshold < 0 selects the default rule max(0.5, kappa * q-quantile) with
// q = 0.99 and kappa = 2 over the computed scores.
LeverageReport leverage_scores(const KernelEngine& engine, double threshold = -1.0);

// The default flagging rule exposed for reporting.
double default_leverage_threshold(const Eigen::VectorXd& scores, double q = 0.99,
                                  double kappa = 2.0);

} // namespace cdk
