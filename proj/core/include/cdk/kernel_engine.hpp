#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cdk/measure.hpp"
#include "cdk/ortho_basis.hpp"

namespace cdk {

// Reproducing kernel of the degree-n polynomial space of a measure:
//   K_n(z, w) = sum_{j=0}^n p_j(z) * conj(p_j(w)).
// Holds the measure and its orthonormal basis together.
struct KernelEngine {
    DiscreteMeasure measure;
    OrthoBasis basis;

    static KernelEngine build(const DiscreteMeasure& measure,
                              const MonomialOrdering& ordering, int n,
                              const OrthonormalizeOptions& opts = {});
    // Univariate build via the Arnoldi path (attaches the Hessenberg matrix).
    static KernelEngine build_arnoldi(const DiscreteMeasure& measure, int n,
                                      const OrthonormalizeOptions& opts = {});

    int n() const { return basis.n; }
    int dim() const { return basis.dim(); }
};

std::complex<double> kernel(const KernelEngine& engine, const Eigen::VectorXcd& z,
                            const Eigen::VectorXcd& w);

// K_n(z, z) = sum_j |p_j(z)|^2 >= 0, evaluated without cancellation.
double kernel_diag(const KernelEngine& engine, const Eigen::VectorXcd& z);

// 1 / K_n(z, z); equals min { ||p||^2 : deg p <= n, p(z) = 1 }.  Returns
// +infinity when K_n(z, z) vanishes (z a common zero of the family).
double christoffel(const KernelEngine& engine, const Eigen::VectorXcd& z);

// Normalized kernel C_n(z, w) = K_n(z, w) / sqrt(K_n(z,z) K_n(w,w)),
// |C_n| <= 1.  Throws numerical_error when either diagonal vanishes.
std::complex<double> cosine(const KernelEngine& engine, const Eigen::VectorXcd& z,
                            const Eigen::VectorXcd& w);

// Kernel matrix for two point lists (rows of ell x d matrices):
//   matrix(j, k) = K_n(z_j, w_k).
// For equal lists the matrix is Hermitian PSD; invertible reports whether
// its eigenvalues clear a relative threshold, condition their ratio.
struct MultiPointKernel {
    Eigen::MatrixXcd matrix;
    bool hermitian = false;
    bool invertible = false;
    double condition = 0.0;
};

MultiPointKernel multipoint_kernel(const KernelEngine& engine,
                                   const Eigen::MatrixXcd& zs,
                                   const Eigen::MatrixXcd& ws);

// Same with cosine entries: matrix(j, k) = C_n(z_j, w_k).
MultiPointKernel multipoint_cosine(const KernelEngine& engine,
                                   const Eigen::MatrixXcd& zs,
                                   const Eigen::MatrixXcd& ws);

// min { ||p||_{2,mu}^2 : deg p <= n, p(z_j) = c_j } = c^* K(zs;zs)^{-1} c.
// Throws numerical_error when the multipoint kernel matrix is singular,
// naming the offending points.
double multipoint_extremal(const KernelEngine& engine, const Eigen::MatrixXcd& zs,
                           const Eigen::VectorXcd& values);

// Mahalanobis distance of z from the mean of the measure (weights used in
// proportion, i.e. the measure is treated as a probability measure):
//   Delta^2 = (z - m) C^{-1} (z - m)^*,  C(j,k) = E[ conj(z_j - m_j)(z_k - m_k) ].
// For a probability measure, 1 + Delta(z)^2 equals the degree-1 kernel
// K_d(z, z).  Throws validation_error for singular covariance, naming the
// degenerate directions.
double mahalanobis(const DiscreteMeasure& measure, const Eigen::VectorXcd& z);

// Rectangular sweep of one complex coordinate; the remaining coordinates are
// pinned at base.  Node (ix, iy) sits at x0 + ix*dx + i*(y0 + iy*dy).
struct GridSpec {
    double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
    int nx = 64, ny = 64;
    int coord = 0;         // swept complex coordinate
    Eigen::VectorXcd base; // fixed values; resized/zeroed to d if empty

    std::complex<double> node(int ix, int iy) const;
};

// K_n(z, z) over a grid with the sublevel mask {K_n <= threshold}.
struct LevelField {
    GridSpec grid;
    double threshold = 0;
    Eigen::MatrixXd values;       // ny x nx, row iy / col ix
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> mask; // 1 = inside
};

LevelField level_field(const KernelEngine& engine, const GridSpec& grid,
                       double threshold);

} // namespace cdk
