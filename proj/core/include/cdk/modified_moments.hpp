#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cdk/kernel_engine.hpp"

namespace cdk {

// Gram matrix of the mu-orthonormal family integrated against a second
// measure nu:
//   matrix(j, l) = sum_i s_i * p_l^mu(w_i) * conj(p_j^mu(w_i)),
// where (w_i, s_i) runs over nu.  Hermitian PSD; equals the identity when
// nu = mu (up to the orthogonality defect).
struct ModifiedMoments {
    Eigen::MatrixXcd matrix; // (n+1) x (n+1)
    int n = -1;
};

ModifiedMoments modified_moments(const KernelEngine& mu_engine,
                                 const DiscreteMeasure& nu);

// Change-of-basis matrix between the two families integrated against nu:
//   R(j, l) = sum_i s_i * p_l^mu(w_i) * conj(p_j^nu(w_i)).
// Satisfies modified_moments(mu, nu).matrix = R^* R when nu's family is
// orthonormal for nu.
Eigen::MatrixXcd mixed_moments(const KernelEngine& nu_engine,
                               const KernelEngine& mu_engine);

// Distance of the modified moment matrix from the identity.
//   epsilon_spectral  = || M - I ||_2   (operator norm, the comparison constant)
//   epsilon_frobenius = || M - I ||_F   (cheap upper diagnostic, >= spectral)
// The two-measure comparison requires epsilon_spectral < 1.
struct ClosenessReport {
    double epsilon_spectral = 0;
    double epsilon_frobenius = 0;
    int n = -1;
    bool satisfied = false; // epsilon_spectral < 1
};

ClosenessReport closeness(const ModifiedMoments& moments);

// Reconstructs nu's kernel through mu's family: with M = modified moments,
//   K_n^nu(z, w) = v(z) M^{-1} v(w)^*,  v(z) = (p_0^mu(z), ..., p_n^mu(z)).
std::complex<double> kernel_through_moments(const KernelEngine& mu_engine,
                                            const ModifiedMoments& moments,
                                            const Eigen::VectorXcd& z,
                                            const Eigen::VectorXcd& w);

struct KernelInterval {
    double lower = 0;
    double upper = 0;
};

// Two-sided bounds (1 - eps) K^nu(z,z) <= K^mu(z,z) <= (1 + eps) K^nu(z,z)
// for each supplied diagonal value of K^nu.  Throws numerical_error when the
// report has epsilon_spectral >= 1 (the comparison carries no information).
std::vector<KernelInterval> two_measure_bounds(const ClosenessReport& report,
                                               const Eigen::VectorXd& nu_diagonals);

// |C^mu(z, w) - C^nu(z, w)| <= 2 * epsilon for normalized kernels.
double cosine_discrepancy_bound(const ClosenessReport& report);

// Multipoint variants: the kernel matrices satisfy the Loewner sandwich
//   (1 - eps) K^nu(zs; zs) <= K^mu(zs; zs) <= (1 + eps) K^nu(zs; zs),
// and the cosine matrices differ by at most 2 sqrt(ell (ell - 1)) eps in
// Frobenius norm.
double multipoint_cosine_bound(const ClosenessReport& report, int ell);
bool multipoint_sandwich_holds(const ClosenessReport& report,
                               const Eigen::MatrixXcd& k_mu,
                               const Eigen::MatrixXcd& k_nu,
                               double slack = 1e-10);

} // namespace cdk
