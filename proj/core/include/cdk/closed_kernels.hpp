#pragma once

#include <Eigen/Dense>
#include <complex>

#include "cdk/conformal.hpp"

namespace cdk {

// ---- Unit disk, area measure (Bergman-type) --------------------------------
// Orthonormal family p_j(w) = sqrt((j+1)/pi) w^j.

// K_n(z, w) = (1/pi) sum_{j=0}^n (j+1) (z conj(w))^j via a stable
// geometric-sum closed form.
std::complex<double> bergman_disk_kernel(int n, std::complex<double> z,
                                         std::complex<double> w);

// max over the closed disk of K_n(z, z) = (n+1)(n+2) / (2 pi), at |z| = 1.
double bergman_disk_max(int n);

// ---- Bergman-type exterior predictors for a compact with exterior map Phi --

// Leading-order exterior diagonal:
//   K_n(z, z) ~ ((n+1)/pi) |Phi'(z)|^2 |Phi(z)|^{2n+2} / (|Phi(z)|^2 - 1).
double bergman_exterior_predictor(const ConformalMap& map, int n,
                                  std::complex<double> z);

// Interior bound K_n(z, z) <= 1 / (pi dist(z, Gamma)^2); the caller supplies
// the distance to the outer boundary.
double bergman_interior_bound(double dist_to_boundary);

// Threshold shape gamma_n = c1 / dist(Gamma, boundary of G_{r(n)})^2 with
// r(n) = sqrt(1 + 1/(n+1)); c1 is an explicit calibration parameter.
double bergman_gamma_shape(double dist_gamma_to_level, double c1);

// gamma_n specialized to the unit disk, where the level curve G_{r(n)} is
// the circle of radius r(n): dist = r(n) - 1.
double bergman_gamma_disk(int n, double c1);

// Exterior ratio limit p_n(z) / p_{n+1}(z) -> 1 / Phi(z).
std::complex<double> bergman_ratio_limit(const ConformalMap& map,
                                         std::complex<double> z);

// ---- Tensor Chebyshev kernel on [-1, 1]^2 ----------------------------------
// Arc-sine product measure; tensor enumeration of partial degree <= n.

// Univariate closed kernel 1 + 2 sum_{k=1}^n T_k(x) conj(T_k(y)).
std::complex<double> chebyshev_univariate_kernel(int n, std::complex<double> x,
                                                 std::complex<double> y);

// Product kernel K(z, w) = K_n(z_1, w_1) K_n(z_2, w_2).
std::complex<double> chebyshev_tensor_kernel(int n, const Eigen::VectorXcd& z,
                                             const Eigen::VectorXcd& w);

// Exact integer corner value K((1,1), (1,1)) = (2n+1)^2.
long long chebyshev_corner_value(int n);

// ---- Complex unit ball in C^d, volume measure ------------------------------

// K_N(z, w) = (1/pi^d) sum_{k=0}^n (k+1)_d (w* z)^k, where w* z is the
// Hermitian pairing sum_j z_j conj(w_j) and (a)_k the Pochhammer symbol;
// N counts all multi-indices of total degree <= n.
std::complex<double> complex_ball_kernel(int d, int n, const Eigen::VectorXcd& z,
                                         const Eigen::VectorXcd& w);

// Same kernel as a function of the pairing s = w* z.
std::complex<double> complex_ball_kernel_pairing(int d, int n,
                                                 std::complex<double> s);

// Value on the diagonal pairing s = 1: (n+1)_{d+1} / (pi^d (d+1)).
double complex_ball_boundary_diag(int d, int n);

// Bergman kernel limit inside the ball: d! / (pi^d (1 - s)^{d+1}).
std::complex<double> complex_ball_bergman_limit(int d, std::complex<double> s);

// Exterior growth predictor (s = w* z, |s| > 1):
//   K_N ~ (n+1)_d / pi^d * s^{n+1} / (s - 1).
std::complex<double> complex_ball_exterior_predictor(int d, int n,
                                                     std::complex<double> s);

// ---- Unit polydisk in C^d, volume measure ----------------------------------

// K_N(z, w) = (1/pi^d) sum_{|alpha| <= n} prod_j (alpha_j + 1) (z_j conj(w_j))^{alpha_j},
// total degree enumeration.
std::complex<double> polydisk_kernel(int d, int n, const Eigen::VectorXcd& z,
                                     const Eigen::VectorXcd& w);

// Bergman limit (1/pi^d) prod_j (1 - z_j conj(w_j))^{-2} inside.
std::complex<double> polydisk_bergman_limit(int d, const Eigen::VectorXcd& z,
                                            const Eigen::VectorXcd& w);

// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
double pochhammer(double a, int k);

} // namespace cdk
