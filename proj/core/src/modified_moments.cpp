#include "cdk/modified_moments.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace cdk {

ModifiedMoments modified_moments(const KernelEngine& mu_engine, const DiscreteMeasure& nu) {
    if (nu.size() == 0) throw validation_error("modified moments need a non-empty measure");
    if (nu.dim() != mu_engine.dim())
        throw validation_error("measures live in different dimensions: " +
                               std::to_string(nu.dim()) + " vs " +
                               std::to_string(mu_engine.dim()));
    const Eigen::MatrixXcd p = mu_engine.basis.evaluate_rows(nu.atoms);
    ModifiedMoments m;
    m.n = mu_engine.n();
    m.matrix = p.adjoint() * nu.weights.asDiagonal() * p;
    m.matrix = 0.5 * (m.matrix + m.matrix.adjoint()).eval();
    return m;
}

Eigen::MatrixXcd mixed_moments(const KernelEngine& nu_engine, const KernelEngine& mu_engine) {
    if (nu_engine.dim() != mu_engine.dim())
        throw validation_error("engines live in different dimensions");
    const DiscreteMeasure& nu = nu_engine.measure;
    const Eigen::MatrixXcd p_mu = mu_engine.basis.evaluate_rows(nu.atoms);
    const Eigen::MatrixXcd p_nu = nu_engine.basis.sample_values;
    return p_nu.adjoint() * nu.weights.asDiagonal() * p_mu;
}

ClosenessReport closeness(const ModifiedMoments& moments) {
    ClosenessReport report;
    report.n = moments.n;
    const Eigen::Index m = moments.matrix.rows();
    const Eigen::MatrixXcd diff = moments.matrix - Eigen::MatrixXcd::Identity(m, m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
    report.epsilon_spectral = es.eigenvalues().cwiseAbs().maxCoeff();
    report.epsilon_frobenius = diff.norm();
    report.satisfied = report.epsilon_spectral < 1.0;
    return report;
}

std::complex<double> kernel_through_moments(const KernelEngine& mu_engine,
                                            const ModifiedMoments& moments,
                                            const Eigen::VectorXcd& z,
                                            const Eigen::VectorXcd& w) {
    const Eigen::VectorXcd vz = mu_engine.basis.evaluate(z);
    const Eigen::VectorXcd vw = mu_engine.basis.evaluate(w);
    // v(z) M^{-1} v(w)^*; the solve is Hermitian positive definite when the
    // second measure determines the degree-n space.
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(moments.matrix);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
        throw numerical_error("modified moment matrix is singular: the comparison measure does "
                              "not determine the degree-" + std::to_string(moments.n) + " space");
    const Eigen::VectorXcd x = ldlt.solve(vw.conjugate());
    return (vz.transpose() * x).value();
}

namespace {

void require_informative(const ClosenessReport& report) {
    if (!(report.epsilon_spectral < 1.0))
        throw numerical_error("two-measure comparison is uninformative: epsilon = " +
                              std::to_string(report.epsilon_spectral) + " >= 1");
}

} // namespace

std::vector<KernelInterval> two_measure_bounds(const ClosenessReport& report,
                                               const Eigen::VectorXd& nu_diagonals) {
    require_informative(report);
    std::vector<KernelInterval> out;
    out.reserve(static_cast<std::size_t>(nu_diagonals.size()));
    for (Eigen::Index i = 0; i < nu_diagonals.size(); ++i) {
        const double k = nu_diagonals[i];
        if (k < 0.0) throw validation_error("diagonal kernel values must be >= 0");
        out.push_back({(1.0 - report.epsilon_spectral) * k,
                       (1.0 + report.epsilon_spectral) * k});
    }
    return out;
}

double cosine_discrepancy_bound(const ClosenessReport& report) {
    require_informative(report);
    return 2.0 * report.epsilon_spectral;
}

double multipoint_cosine_bound(const ClosenessReport& report, int ell) {
    require_informative(report);
    if (ell < 1) throw validation_error("point count must be >= 1");
    return 2.0 * std::sqrt(static_cast<double>(ell) * (ell - 1.0)) * report.epsilon_spectral;
}

bool multipoint_sandwich_holds(const ClosenessReport& report, const Eigen::MatrixXcd& k_mu,
                               const Eigen::MatrixXcd& k_nu, double slack) {
    require_informative(report);
    if (k_mu.rows() != k_nu.rows() || k_mu.cols() != k_nu.cols() || k_mu.rows() != k_mu.cols())
        throw validation_error("kernel matrices must be square and of equal size");
    const double eps = report.epsilon_spectral;
    const Eigen::MatrixXcd upper = (1.0 + eps) * k_nu - k_mu;
    const Eigen::MatrixXcd lower = k_mu - (1.0 - eps) * k_nu;
    const double scale = std::max(1.0, std::max(k_mu.norm(), k_nu.norm()));
    const auto min_eig = [](const Eigen::MatrixXcd& m) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            (0.5 * (m + m.adjoint())).eval(), Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    };
    return min_eig(upper) >= -slack * scale && min_eig(lower) >= -slack * scale;
}

} // namespace cdk
