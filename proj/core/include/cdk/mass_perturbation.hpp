#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "cdk/kernel_engine.hpp"

namespace cdk {

// Additive point-mass perturbation sigma = sum_j t_j * delta(z_j); the atoms
// must be pairwise distinct.
struct MassPerturbation {
    DiscreteMeasure masses;
    Eigen::Index count() const { return masses.size(); }
};

// Exact finite-n effect of adding sigma to mu at a point z:
//   K_n^{mu+sigma}(z, z) / K_n^mu(z, z) = 1 - b (D^2 + C)^{-1} b^*,
// where C is the cosine matrix of mu at the mass points, b the cosine row
// (C_n(z, z_1), ..., C_n(z, z_ell)), and D^2 = diag(1 / (t_j K_n(z_j, z_j))).
//
// sigma_chain holds the truncation chain Sigma_0, Sigma_1, ..., which
// brackets the ratio from alternating sides:
//   Sigma_1 <= Sigma_3 <= ... <= ratio <= ... <= Sigma_4 <= Sigma_2 <= Sigma_0 = 1,
// with Sigma_1 = det [[C, b^*], [b, 1]] / det C.
struct PerturbationReport {
    double ratio = 1.0;                 // exact ratio at z
    double mu_diag = 0.0;               // K_n^mu(z, z)
    std::vector<double> sigma_chain;    // Sigma_0 .. Sigma_{depth}
    Eigen::MatrixXcd cosine_matrix;     // C, ell x ell
    Eigen::VectorXcd cosine_row;        // b, length ell
    Eigen::VectorXd mass_diagonals;     // K_n^mu(z_j, z_j)
    Eigen::VectorXd d_squared;          // 1 / (t_j K_n^mu(z_j, z_j))
    double condition = 0.0;             // cond(D^2 + C)
    bool ill_conditioned = false;       // condition > 1e12
};

// depth = largest chain index computed (Sigma_0..Sigma_depth).  When z
// coincides with a mass point the ratio is evaluated by a cancellation-free
// recursion (peel off that mass, apply the single-mass formula) instead of
// the direct difference.  Throws numerical_error when C is singular, naming
// the dependent mass points; requires n >= ell - 1 in one variable.
PerturbationReport exact_mass_ratio(const KernelEngine& mu_engine,
                                    const MassPerturbation& sigma,
                                    const Eigen::VectorXcd& z, int depth = 4);

// Univariate exterior asymptotics.  g maps the unbounded component of the
// complement of the support onto the unit disk (for Bergman-type measures
// g = 1 / Phi, the reciprocal exterior conformal map); it is the limit of
// p_n / p_{n+1}.
using ScalarMap = std::function<std::complex<double>(std::complex<double>)>;

// Limit of the ratio K_n^{mu+sigma}(z, z) / K_n^mu(z, z) as n grows:
//   prod_j | (g(z) - g(z_j)) / (1 - g(z) conj(g(z_j))) |^2.
// When z equals a mass point z_m the ratio tends to zero and the meaningful
// predictor switches to the limit of K_n^{mu+sigma}(z_m, z_m) itself, which
// is 1 / t_m; the at_mass flag reports which convention the value uses.
struct AsymptoticRatio {
    double value = 0;
    bool at_mass = false;
    Eigen::Index mass_index = -1;
};

AsymptoticRatio asymptotic_ratio_predictor(const ScalarMap& g,
                                           const MassPerturbation& sigma,
                                           std::complex<double> z);

// Limit modulus of the normalized kernel (z, w exterior):
//   |C_n(z, w)| -> sqrt((1 - |g(z)|^2)(1 - |g(w)|^2)) / |1 - g(z) conj(g(w))|.
double cosine_modulus_limit(const ScalarMap& g, std::complex<double> z,
                            std::complex<double> w);

// Exterior asymptotics of the normalized kernel around a mass configuration:
// modulus is cosine_modulus_limit(z, w); det_ratio is the limit modulus of
// the bordered determinant ratio det [[C, col], [row, C_n(z, w)]] / det C,
// which equals modulus times the Blaschke products
//   prod_j |(g(z) - g(z_j)) / (1 - g(z) conj(g(z_j)))|
// over both probe arguments.  With w = z and no masses both values are 1.
struct CosineAsymptotic {
    double modulus = 0;
    double det_ratio = 0;
};

CosineAsymptotic cosine_asymptotic(const ScalarMap& g, const MassPerturbation& sigma,
                                   std::complex<double> z, std::complex<double> w);

// Pick matrix P(j, k) = 1 / (1 - a_j conj(b_k)) for unit-disk nodes, and its
// determinant in closed product form:
//   det P = prod_{j<k} (a_k - a_j)(conj(b_k) - conj(b_j)) / prod_{j,k} (1 - a_j conj(b_k)).
Eigen::MatrixXcd pick_matrix(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);
std::complex<double> pick_determinant(const Eigen::VectorXcd& a,
                                      const Eigen::VectorXcd& b);

} // namespace cdk
