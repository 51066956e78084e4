#include "cdk/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace cdk {

namespace {

const double pi = std::acos(-1.0);

} // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int m) {
    if (m < 1) throw validation_error("Gauss-Legendre needs at least one node");
    // Golub-Welsch on the Jacobi matrix of the Legendre recurrence:
    // off-diagonal b_k = k / sqrt(4 k^2 - 1).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(m, m);
    for (int k = 1; k < m; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    Eigen::VectorXd nodes = es.eigenvalues();
    Eigen::VectorXd weights(m);
    for (int i = 0; i < m; ++i) {
        const double first = es.eigenvectors()(0, i);
        weights[i] = 2.0 * first * first;
    }
    return {std::move(nodes), std::move(weights)};
}

QuadratureMeasure disk_area_quadrature(int exact_through, std::complex<double> center,
                                       double rho) {
    if (exact_through < 0) throw validation_error("moment exactness degree must be >= 0");
    if (!(rho > 0.0)) throw validation_error("disk radius must be positive");
    // integral over the disk of z^a conj(z)^b dA splits into a radial part
    // r^{a+b+1} dr (degree <= exact_through + 1) and a circular part
    // e^{i (a-b) theta} with |a - b| <= exact_through.
    const int radial = (exact_through + 3) / 2;         // 2*radial - 1 >= exact_through + 1
    const int angular = exact_through + 2;              // > exact_through kills all harmonics
    auto [x, w] = gauss_legendre(radial);

    QuadratureMeasure q;
    q.label = "disk-area";
    q.target_mass = pi * rho * rho;
    q.atoms.resize(static_cast<Eigen::Index>(radial) * angular, 1);
    q.weights.resize(q.atoms.rows());
    Eigen::Index at = 0;
    for (int i = 0; i < radial; ++i) {
        const double r = 0.5 * (x[i] + 1.0);     // map [-1,1] -> [0,1]
        const double wr = 0.5 * w[i] * r;        // includes the r dr Jacobian
        for (int k = 0; k < angular; ++k) {
            const double theta = 2.0 * pi * k / angular;
            q.atoms(at, 0) = center + rho * r * std::complex<double>(std::cos(theta), std::sin(theta));
            q.weights[at] = rho * rho * wr * (2.0 * pi / angular);
            ++at;
        }
    }
    q.validate();
    return q;
}

QuadratureMeasure ellipse_area_quadrature(int exact_through, double R) {
    if (exact_through < 0) throw validation_error("moment exactness degree must be >= 0");
    if (!(R > 1.0)) throw validation_error("ellipse parameter R must be > 1");
    const double a = 0.5 * (R + 1.0 / R);
    const double b = 0.5 * (R - 1.0 / R);
    // Parametrize by (a r cos t, b r sin t); monomial moments are polynomials
    // of degree <= exact_through in r cos t and r sin t, with Jacobian a b r.
    const int radial = (exact_through + 3) / 2;
    const int angular = 2 * exact_through + 4; // generous; harmonics reach exact_through
    auto [x, w] = gauss_legendre(radial);

    QuadratureMeasure q;
    q.label = "ellipse-area";
    q.target_mass = pi * a * b;
    q.atoms.resize(static_cast<Eigen::Index>(radial) * angular, 1);
    q.weights.resize(q.atoms.rows());
    Eigen::Index at = 0;
    for (int i = 0; i < radial; ++i) {
        const double r = 0.5 * (x[i] + 1.0);
        const double wr = 0.5 * w[i] * r;
        for (int k = 0; k < angular; ++k) {
            const double t = 2.0 * pi * k / angular;
            q.atoms(at, 0) = std::complex<double>(a * r * std::cos(t), b * r * std::sin(t));
            q.weights[at] = a * b * wr * (2.0 * pi / angular);
            ++at;
        }
    }
    q.validate();
    return q;
}

QuadratureMeasure chebyshev_tensor_quadrature(int m) {
    if (m < 1) throw validation_error("Gauss-Chebyshev needs at least one node per axis");
    Eigen::VectorXd nodes(m);
    for (int i = 0; i < m; ++i) nodes[i] = std::cos((2.0 * i + 1.0) * pi / (2.0 * m));

    QuadratureMeasure q;
    q.label = "chebyshev-tensor";
    q.target_mass = 1.0;
    q.atoms.resize(static_cast<Eigen::Index>(m) * m, 2);
    q.weights.resize(q.atoms.rows());
    Eigen::Index at = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            q.atoms(at, 0) = nodes[i];
            q.atoms(at, 1) = nodes[j];
            q.weights[at] = 1.0 / (static_cast<double>(m) * m);
            ++at;
        }
    q.validate();
    return q;
}

} // namespace cdk
