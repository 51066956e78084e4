#include "cdk/closed_kernels.hpp"

#include <cmath>

#include "cdk/errors.hpp"

namespace cdk {

namespace {

const double pi = std::acos(-1.0);

void check_n(int n) {
    if (n < 0) throw validation_error("kernel degree n must be >= 0, got " + std::to_string(n));
}

void check_d(int d) {
    if (d < 1) throw validation_error("dimension must be >= 1, got " + std::to_string(d));
}

} // namespace

double pochhammer(double a, int k) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= a + j;
    return p;
}

std::complex<double> bergman_disk_kernel(int n, std::complex<double> z,
                                         std::complex<double> w) {
    check_n(n);
    const std::complex<double> s = z * std::conj(w);
    // sum_{j=0}^{n} (j+1) s^j = (1 - (n+2) s^{n+1} + (n+1) s^{n+2}) / (1-s)^2;
    // near s = 1 the closed form cancels, so fall back to plain summation.
    if (std::abs(1.0 - s) > 1e-6) {
        const std::complex<double> sn1 = std::pow(s, n + 1);
        return (1.0 - (n + 2.0) * sn1 + (n + 1.0) * sn1 * s) / ((1.0 - s) * (1.0 - s)) / pi;
    }
    std::complex<double> acc = 0.0, p = 1.0;
    for (int j = 0; j <= n; ++j) {
        acc += (j + 1.0) * p;
        p *= s;
    }
    return acc / pi;
}

double bergman_disk_max(int n) {
    check_n(n);
    return (n + 1.0) * (n + 2.0) / (2.0 * pi);
}

double bergman_exterior_predictor(const ConformalMap& map, int n, std::complex<double> z) {
    check_n(n);
    const std::complex<double> phi = map.phi(z);
    const double m2 = std::norm(phi);
    if (!(m2 > 1.0))
        throw validation_error("exterior predictor needs |Phi(z)| > 1, got " +
                               std::to_string(std::sqrt(m2)));
    const double dm2 = std::norm(map.dphi(z));
    return (n + 1.0) / pi * dm2 * std::pow(m2, n + 1) / (m2 - 1.0);
}

double bergman_interior_bound(double dist_to_boundary) {
    if (!(dist_to_boundary > 0.0))
        throw validation_error("interior bound needs a positive distance to the boundary");
    return 1.0 / (pi * dist_to_boundary * dist_to_boundary);
}

double bergman_gamma_shape(double dist_gamma_to_level, double c1) {
    if (!(dist_gamma_to_level > 0.0))
        throw validation_error("gamma shape needs a positive separation distance");
    if (!(c1 > 0.0)) throw validation_error("calibration constant c1 must be positive");
    return c1 / (dist_gamma_to_level * dist_gamma_to_level);
}

double bergman_gamma_disk(int n, double c1) {
    check_n(n);
    // Level curve |Phi| = r(n) is the circle of radius r(n) for the disk.
    const double r = std::sqrt(1.0 + 1.0 / (n + 1.0));
    return bergman_gamma_shape(r - 1.0, c1);
}

std::complex<double> bergman_ratio_limit(const ConformalMap& map, std::complex<double> z) {
    const std::complex<double> phi = map.phi(z);
    if (!(std::abs(phi) > 1.0))
        throw validation_error("ratio limit needs an exterior point, |Phi(z)| > 1");
    return 1.0 / phi;
}

std::complex<double> chebyshev_univariate_kernel(int n, std::complex<double> x,
                                                 std::complex<double> y) {
    check_n(n);
    // T_{k+1}(v) = 2 v T_k(v) - T_{k-1}(v).
    std::complex<double> acc = 1.0;
    std::complex<double> tx0 = 1.0, tx1 = x, ty0 = 1.0, ty1 = y;
    for (int k = 1; k <= n; ++k) {
        acc += 2.0 * tx1 * std::conj(ty1);
        const std::complex<double> tx2 = 2.0 * x * tx1 - tx0;
        const std::complex<double> ty2 = 2.0 * y * ty1 - ty0;
        tx0 = tx1;
        tx1 = tx2;
        ty0 = ty1;
        ty1 = ty2;
    }
    return acc;
}

std::complex<double> chebyshev_tensor_kernel(int n, const Eigen::VectorXcd& z,
                                             const Eigen::VectorXcd& w) {
    if (z.size() != 2 || w.size() != 2)
        throw validation_error("the tensor Chebyshev kernel lives on C^2");
    return chebyshev_univariate_kernel(n, z[0], w[0]) *
           chebyshev_univariate_kernel(n, z[1], w[1]);
}

long long chebyshev_corner_value(int n) {
    check_n(n);
    const long long m = 2LL * n + 1LL;
    return m * m;
}

std::complex<double> complex_ball_kernel_pairing(int d, int n, std::complex<double> s) {
    check_d(d);
    check_n(n);
    std::complex<double> acc = 0.0, p = 1.0;
    for (int k = 0; k <= n; ++k) {
        acc += pochhammer(k + 1.0, d) * p;
        p *= s;
    }
    return acc / std::pow(pi, d);
}

std::complex<double> complex_ball_kernel(int d, int n, const Eigen::VectorXcd& z,
                                         const Eigen::VectorXcd& w) {
    if (z.size() != d || w.size() != d)
        throw validation_error("point dimension does not match the ball dimension");
    return complex_ball_kernel_pairing(d, n, w.dot(z));
}

double complex_ball_boundary_diag(int d, int n) {
    check_d(d);
    check_n(n);
    return pochhammer(n + 1.0, d + 1) / (std::pow(pi, d) * (d + 1.0));
}

std::complex<double> complex_ball_bergman_limit(int d, std::complex<double> s) {
    check_d(d);
    if (!(std::abs(s) < 1.0))
        throw validation_error("the Bergman limit needs |w* z| < 1 (interior points)");
    return pochhammer(1.0, d) / (std::pow(pi, d) * std::pow(1.0 - s, d + 1));
}

std::complex<double> complex_ball_exterior_predictor(int d, int n, std::complex<double> s) {
    check_d(d);
    check_n(n);
    if (!(std::abs(s) > 1.0))
        throw validation_error("the exterior predictor needs |w* z| > 1");
    return pochhammer(n + 1.0, d) / std::pow(pi, d) * std::pow(s, n + 1) / (s - 1.0);
}

std::complex<double> polydisk_kernel(int d, int n, const Eigen::VectorXcd& z,
                                     const Eigen::VectorXcd& w) {
    check_d(d);
    check_n(n);
    if (z.size() != d || w.size() != d)
        throw validation_error("point dimension does not match the polydisk dimension");
    // Recursive split over the last coordinate:
    //   K_d,n(z, w) = sum_{a=0}^{n} (a+1) s_d^a * K_{d-1, n-a}(z', w'),
    // implemented iteratively with a table over the remaining budget.
    Eigen::VectorXcd s(d);
    for (int j = 0; j < d; ++j) s[j] = z[j] * std::conj(w[j]);

    // table[b] = sum over multi-indices of the processed coordinates with
    // total degree <= b of prod (a_j + 1) s_j^{a_j}.
    std::vector<std::complex<double>> table(static_cast<std::size_t>(n) + 1, 1.0);
    for (int j = 0; j < d; ++j) {
        std::vector<std::complex<double>> next(static_cast<std::size_t>(n) + 1, 0.0);
        for (int b = 0; b <= n; ++b) {
            std::complex<double> p = 1.0;
            for (int a = 0; a <= b; ++a) {
                next[static_cast<std::size_t>(b)] +=
                    (a + 1.0) * p * table[static_cast<std::size_t>(b - a)];
                p *= s[j];
            }
        }
        table = std::move(next);
    }
    return table[static_cast<std::size_t>(n)] / std::pow(pi, d);
}

std::complex<double> polydisk_bergman_limit(int d, const Eigen::VectorXcd& z,
                                            const Eigen::VectorXcd& w) {
    check_d(d);
    if (z.size() != d || w.size() != d)
        throw validation_error("point dimension does not match the polydisk dimension");
    std::complex<double> acc = 1.0 / std::pow(pi, d);
    for (int j = 0; j < d; ++j) {
        const std::complex<double> s = z[j] * std::conj(w[j]);
        if (!(std::abs(s) < 1.0))
            throw validation_error("the Bergman limit needs interior points of the polydisk");
        acc /= (1.0 - s) * (1.0 - s);
    }
    return acc;
}

} // namespace cdk
