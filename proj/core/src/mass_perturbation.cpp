#include "cdk/mass_perturbation.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace cdk {

namespace {

bool same_point(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// Index of the mass coinciding with z (exact coordinates), or -1.
Eigen::Index mass_at(const MassPerturbation& sigma, const Eigen::VectorXcd& z) {
    for (Eigen::Index j = 0; j < sigma.count(); ++j)
        if (same_point(sigma.masses.atom(j), z)) return j;
    return -1;
}

[[noreturn]] void throw_singular_cosine(const Eigen::MatrixXcd& c) {
    // Name the points loading the null direction of the cosine matrix.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c);
    const Eigen::VectorXcd dir = es.eigenvectors().col(0);
    std::string who;
    for (Eigen::Index j = 0; j < dir.size(); ++j)
        if (std::abs(dir[j]) > 1e-6) who += (who.empty() ? "" : ", ") + std::to_string(j);
    throw numerical_error(
        "cosine matrix of the mass points is singular: evaluations at mass points [" + who +
        "] are linearly dependent on the polynomial space; raise n (one variable needs "
        "n >= number of masses - 1)");
}

} // namespace

PerturbationReport exact_mass_ratio(const KernelEngine& mu_engine,
                                    const MassPerturbation& sigma,
                                    const Eigen::VectorXcd& z, int depth) {
    sigma.masses.validate();
    if (sigma.masses.dim() != mu_engine.dim())
        throw validation_error("perturbation dimension " + std::to_string(sigma.masses.dim()) +
                               " does not match the measure dimension " +
                               std::to_string(mu_engine.dim()));
    if (depth < 1) throw validation_error("chain depth must be >= 1");
    const Eigen::Index ell = sigma.count();

    PerturbationReport report;
    report.mu_diag = kernel_diag(mu_engine, z);
    if (report.mu_diag <= 0.0)
        throw numerical_error("the unperturbed kernel vanishes at z; the ratio is undefined");

    report.mass_diagonals.resize(ell);
    for (Eigen::Index j = 0; j < ell; ++j) {
        report.mass_diagonals[j] = kernel_diag(mu_engine, sigma.masses.atom(j));
        if (report.mass_diagonals[j] <= 0.0)
            throw numerical_error("the kernel vanishes at mass point " + std::to_string(j) +
                                  "; that mass is invisible to the degree-" +
                                  std::to_string(mu_engine.n()) + " space");
    }
    report.d_squared =
        (sigma.masses.weights.cwiseProduct(report.mass_diagonals)).cwiseInverse();

    const MultiPointKernel cmk =
        multipoint_cosine(mu_engine, sigma.masses.atoms, sigma.masses.atoms);
    if (!cmk.invertible) throw_singular_cosine(cmk.matrix);
    report.cosine_matrix = cmk.matrix;

    report.cosine_row.resize(ell);
    for (Eigen::Index j = 0; j < ell; ++j)
        report.cosine_row[j] = cosine(mu_engine, z, sigma.masses.atom(j));

    // Direct formula: ratio = 1 - b (D^2 + C)^{-1} b^*.
    Eigen::MatrixXcd a = report.cosine_matrix;
    a.diagonal() += report.d_squared.cast<std::complex<double>>();
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        const double hi = es.eigenvalues().maxCoeff();
        report.condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
        report.ill_conditioned = !(report.condition <= 1e12);
    }
    const Eigen::VectorXcd x = a.ldlt().solve(report.cosine_row.conjugate());
    const double direct = 1.0 - (report.cosine_row.transpose() * x).value().real();

    // Truncation chain Sigma_m = 1 - sum_{j<m} (-1)^j b C^{-1} (D^2 C^{-1})^j b^*.
    report.sigma_chain.assign(static_cast<std::size_t>(depth) + 1, 1.0);
    {
        Eigen::LDLT<Eigen::MatrixXcd> cfac(report.cosine_matrix);
        const Eigen::VectorXcd d2c = report.d_squared.cast<std::complex<double>>();
        Eigen::VectorXcd y = cfac.solve(report.cosine_row.conjugate());
        double partial = 0.0;
        double sign = 1.0;
        for (int m = 1; m <= depth; ++m) {
            partial += sign * (report.cosine_row.transpose() * y).value().real();
            report.sigma_chain[static_cast<std::size_t>(m)] = 1.0 - partial;
            y = cfac.solve(d2c.cwiseProduct(y).eval());
            sign = -sign;
        }
    }

    const Eigen::Index at = mass_at(sigma, z);
    if (at < 0) {
        report.ratio = direct;
        return report;
    }

    // z sits on mass point `at`: peel that mass off and apply the one-mass
    // formula to avoid the catastrophic cancellation of the direct form.
    double base_ratio = 1.0;
    if (ell > 1) {
        MassPerturbation rest;
        rest.masses.atoms.resize(ell - 1, sigma.masses.dim());
        rest.masses.weights.resize(ell - 1);
        Eigen::Index r = 0;
        for (Eigen::Index j = 0; j < ell; ++j) {
            if (j == at) continue;
            rest.masses.atoms.row(r) = sigma.masses.atoms.row(j);
            rest.masses.weights[r] = sigma.masses.weights[j];
            ++r;
        }
        base_ratio = exact_mass_ratio(mu_engine, rest, z, depth).ratio;
    }
    const double x_mass = sigma.masses.weights[at] * base_ratio * report.mu_diag;
    report.ratio = base_ratio / (1.0 + x_mass);
    return report;
}

namespace {

std::complex<double> disk_value(const ScalarMap& g, std::complex<double> z,
                                const char* what) {
    const std::complex<double> v = g(z);
    if (!(std::abs(v) < 1.0))
        throw validation_error(std::string(what) +
                               " must map into the open unit disk; |g| = " +
                               std::to_string(std::abs(v)));
    return v;
}

std::complex<double> blaschke(std::complex<double> gz, std::complex<double> gj) {
    return (gz - gj) / (1.0 - gz * std::conj(gj));
}

} // namespace

AsymptoticRatio asymptotic_ratio_predictor(const ScalarMap& g, const MassPerturbation& sigma,
                                           std::complex<double> z) {
    sigma.masses.validate();
    if (sigma.masses.dim() != 1)
        throw validation_error("the asymptotic predictor works in one complex variable");

    AsymptoticRatio out;
    Eigen::VectorXcd zvec(1);
    zvec[0] = z;
    const Eigen::Index at = mass_at(sigma, zvec);
    if (at >= 0) {
        // The ratio tends to 0 at a mass point; the informative limit is
        // K^{mu+sigma}(z_m, z_m) -> 1 / t_m.
        out.at_mass = true;
        out.mass_index = at;
        out.value = 1.0 / sigma.masses.weights[at];
        return out;
    }

    const std::complex<double> gz = disk_value(g, z, "the probe point under g");
    std::vector<std::complex<double>> gj(static_cast<std::size_t>(sigma.count()));
    for (Eigen::Index j = 0; j < sigma.count(); ++j) {
        gj[static_cast<std::size_t>(j)] =
            disk_value(g, sigma.masses.atoms(j, 0), "every mass point under g");
        for (Eigen::Index k = 0; k < j; ++k)
            if (std::abs(gj[static_cast<std::size_t>(j)] - gj[static_cast<std::size_t>(k)]) < 1e-14)
                throw validation_error("degenerate configuration: g sends mass points " +
                                       std::to_string(k) + " and " + std::to_string(j) +
                                       " to the same value");
    }

    double value = 1.0;
    for (const auto& gm : gj) value *= std::norm(blaschke(gz, gm));
    out.value = value;
    return out;
}

double cosine_modulus_limit(const ScalarMap& g, std::complex<double> z,
                            std::complex<double> w) {
    const std::complex<double> gz = disk_value(g, z, "the first argument under g");
    const std::complex<double> gw = disk_value(g, w, "the second argument under g");
    return std::sqrt((1.0 - std::norm(gz)) * (1.0 - std::norm(gw))) /
           std::abs(1.0 - gz * std::conj(gw));
}

CosineAsymptotic cosine_asymptotic(const ScalarMap& g, const MassPerturbation& sigma,
                                   std::complex<double> z, std::complex<double> w) {
    if (sigma.count() > 0) sigma.masses.validate();
    if (sigma.count() > 0 && sigma.masses.dim() != 1)
        throw validation_error("the asymptotic cosine works in one complex variable");
    CosineAsymptotic out;
    out.modulus = cosine_modulus_limit(g, z, w);
    const std::complex<double> gz = g(z), gw = g(w);
    double blaschkes = 1.0;
    for (Eigen::Index j = 0; j < sigma.count(); ++j) {
        const std::complex<double> gm =
            disk_value(g, sigma.masses.atoms(j, 0), "every mass point under g");
        blaschkes *= std::abs(blaschke(gz, gm)) * std::abs(blaschke(gw, gm));
    }
    out.det_ratio = out.modulus * blaschkes;
    return out;
}

Eigen::MatrixXcd pick_matrix(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    if (a.size() != b.size())
        throw validation_error("Pick matrix needs node lists of equal length");
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (!(std::abs(a[i]) < 1.0) || !(std::abs(b[i]) < 1.0))
            throw validation_error("Pick nodes must lie in the open unit disk (node " +
                                   std::to_string(i) + ")");
    Eigen::MatrixXcd p(a.size(), b.size());
    for (Eigen::Index j = 0; j < a.size(); ++j)
        for (Eigen::Index k = 0; k < b.size(); ++k)
            p(j, k) = 1.0 / (1.0 - a[j] * std::conj(b[k]));
    return p;
}

std::complex<double> pick_determinant(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    if (a.size() != b.size())
        throw validation_error("Pick determinant needs node lists of equal length");
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (!(std::abs(a[i]) < 1.0) || !(std::abs(b[i]) < 1.0))
            throw validation_error("Pick nodes must lie in the open unit disk (node " +
                                   std::to_string(i) + ")");
    // det P = prod_{j<k} (a_k - a_j)(conj(b_k) - conj(b_j)) / prod_{j,k} (1 - a_j conj(b_k)).
    std::complex<double> num = 1.0;
    for (Eigen::Index k = 0; k < a.size(); ++k)
        for (Eigen::Index j = 0; j < k; ++j)
            num *= (a[k] - a[j]) * std::conj(b[k] - b[j]);
    std::complex<double> den = 1.0;
    for (Eigen::Index j = 0; j < a.size(); ++j)
        for (Eigen::Index k = 0; k < b.size(); ++k)
            den *= 1.0 - a[j] * std::conj(b[k]);
    return num / den;
}

} // namespace cdk
