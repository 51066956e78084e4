#include "cdk/kernel_engine.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "cdk/arnoldi.hpp"

namespace cdk {

KernelEngine KernelEngine::build(const DiscreteMeasure& measure,
                                 const MonomialOrdering& ordering, int n,
                                 const OrthonormalizeOptions& opts) {
    KernelEngine e;
    e.measure = measure;
    e.basis = orthonormalize(measure, ordering, n, opts);
    return e;
}

KernelEngine KernelEngine::build_arnoldi(const DiscreteMeasure& measure, int n,
                                         const OrthonormalizeOptions& opts) {
    KernelEngine e;
    e.measure = measure;
    e.basis = arnoldi_univariate(measure, n, opts);
    return e;
}

std::complex<double> kernel(const KernelEngine& engine, const Eigen::VectorXcd& z,
                            const Eigen::VectorXcd& w) {
    const Eigen::VectorXcd vz = engine.basis.evaluate(z);
    const Eigen::VectorXcd vw = engine.basis.evaluate(w);
    return vw.dot(vz); // sum_j vz_j conj(vw_j)
}

double kernel_diag(const KernelEngine& engine, const Eigen::VectorXcd& z) {
    return engine.basis.evaluate(z).squaredNorm();
}

double christoffel(const KernelEngine& engine, const Eigen::VectorXcd& z) {
    const double k = kernel_diag(engine, z);
    if (k <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / k;
}

std::complex<double> cosine(const KernelEngine& engine, const Eigen::VectorXcd& z,
                            const Eigen::VectorXcd& w) {
    const Eigen::VectorXcd vz = engine.basis.evaluate(z);
    const Eigen::VectorXcd vw = engine.basis.evaluate(w);
    const double nz = vz.norm(), nw = vw.norm();
    if (nz == 0.0 || nw == 0.0)
        throw numerical_error("cosine undefined: the diagonal kernel vanishes at an argument");
    return vw.dot(vz) / (nz * nw);
}

namespace {

bool same_points(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

MultiPointKernel finish_multipoint(Eigen::MatrixXcd m, bool hermitian) {
    MultiPointKernel out;
    out.hermitian = hermitian;
    if (hermitian) m = 0.5 * (m + m.adjoint()).eval();
    out.matrix = std::move(m);
    if (hermitian) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(out.matrix, Eigen::EigenvaluesOnly);
        const Eigen::VectorXd ev = es.eigenvalues();
        const double top = ev.cwiseAbs().maxCoeff();
        const double bottom = ev.minCoeff();
        out.invertible = top > 0.0 && bottom > 1e-12 * top;
        out.condition = out.invertible ? top / bottom : std::numeric_limits<double>::infinity();
    } else {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(out.matrix);
        const Eigen::VectorXd sv = svd.singularValues();
        const double top = sv.size() ? sv[0] : 0.0;
        const double bottom = sv.size() ? sv[sv.size() - 1] : 0.0;
        out.invertible = top > 0.0 && bottom > 1e-12 * top;
        out.condition = out.invertible ? top / bottom : std::numeric_limits<double>::infinity();
    }
    return out;
}

} // namespace

MultiPointKernel multipoint_kernel(const KernelEngine& engine, const Eigen::MatrixXcd& zs,
                                   const Eigen::MatrixXcd& ws) {
    if (zs.rows() == 0 || ws.rows() == 0)
        throw validation_error("multipoint kernel needs non-empty point lists");
    const Eigen::MatrixXcd vz = engine.basis.evaluate_rows(zs);
    const Eigen::MatrixXcd vw = engine.basis.evaluate_rows(ws);
    const bool hermitian = same_points(zs, ws);
    return finish_multipoint(vz * vw.adjoint(), hermitian);
}

MultiPointKernel multipoint_cosine(const KernelEngine& engine, const Eigen::MatrixXcd& zs,
                                   const Eigen::MatrixXcd& ws) {
    if (zs.rows() == 0 || ws.rows() == 0)
        throw validation_error("multipoint cosine needs non-empty point lists");
    const Eigen::MatrixXcd vz = engine.basis.evaluate_rows(zs);
    const Eigen::MatrixXcd vw = engine.basis.evaluate_rows(ws);
    Eigen::VectorXd nz = vz.rowwise().norm(), nw = vw.rowwise().norm();
    if (nz.minCoeff() == 0.0 || nw.minCoeff() == 0.0)
        throw numerical_error("cosine undefined: the diagonal kernel vanishes at a listed point");
    Eigen::MatrixXcd m = vz * vw.adjoint();
    m = nz.cwiseInverse().asDiagonal() * m * nw.cwiseInverse().asDiagonal();
    const bool hermitian = same_points(zs, ws);
    return finish_multipoint(std::move(m), hermitian);
}

double multipoint_extremal(const KernelEngine& engine, const Eigen::MatrixXcd& zs,
                           const Eigen::VectorXcd& values) {
    if (zs.rows() != values.size())
        throw validation_error("extremal problem needs one target value per point");
    const MultiPointKernel mk = multipoint_kernel(engine, zs, zs);
    if (!mk.invertible) {
        std::string who;
        for (Eigen::Index i = 0; i < zs.rows(); ++i) who += (who.empty() ? "" : ", ") + std::to_string(i);
        throw numerical_error(
            "multipoint kernel matrix is singular; the evaluation functionals at points [" + who +
            "] are linearly dependent on the degree-" + std::to_string(engine.n()) + " space");
    }
    const Eigen::VectorXcd x = mk.matrix.ldlt().solve(values);
    return values.dot(x).real(); // c^* K^{-1} c
}

double mahalanobis(const DiscreteMeasure& measure, const Eigen::VectorXcd& z) {
    if (measure.size() == 0) throw validation_error("mahalanobis needs a non-empty measure");
    if (z.size() != measure.dim())
        throw validation_error("point dimension " + std::to_string(z.size()) +
                               " does not match measure dimension " +
                               std::to_string(measure.dim()));
    const int d = measure.dim();
    const double mass = measure.total_mass();

    Eigen::VectorXcd mean = Eigen::VectorXcd::Zero(d);
    for (Eigen::Index i = 0; i < measure.size(); ++i)
        mean += (measure.weights[i] / mass) * measure.atoms.row(i).transpose();

    // c(j, k) = E[ conj(z_j - m_j) (z_k - m_k) ] under the probability
    // normalization of the weights.
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 0; i < measure.size(); ++i) {
        const Eigen::VectorXcd centered = measure.atoms.row(i).transpose() - mean;
        c.noalias() += (measure.weights[i] / mass) * (centered.conjugate() * centered.transpose());
    }
    c = 0.5 * (c + c.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double top = ev.cwiseAbs().maxCoeff();
    const double floor = std::max(top, 1.0) * 1e-13;
    for (Eigen::Index j = 0; j < ev.size(); ++j) {
        if (ev[j] > floor) continue;
        // Name the coordinates loading the degenerate direction.
        const Eigen::VectorXcd dir = es.eigenvectors().col(j);
        std::string coords;
        for (Eigen::Index k = 0; k < d; ++k)
            if (std::abs(dir[k]) > 1e-6) coords += (coords.empty() ? "" : ", ") + std::to_string(k + 1);
        throw validation_error(
            "covariance is singular: the cloud is degenerate along a direction supported on "
            "coordinates [" + coords + "]");
    }

    const Eigen::VectorXcd centered_row = z - mean; // row convention: (z - m) C^{-1} (z - m)^*
    const Eigen::VectorXcd solved = es.eigenvectors() *
                                    (es.eigenvectors().adjoint() * centered_row.conjugate())
                                        .cwiseQuotient(ev.cast<std::complex<double>>());
    const double delta2 = (centered_row.transpose() * solved).value().real();
    return std::sqrt(std::max(0.0, delta2));
}

std::complex<double> GridSpec::node(int ix, int iy) const {
    const double dx = nx > 1 ? (x1 - x0) / (nx - 1) : 0.0;
    const double dy = ny > 1 ? (y1 - y0) / (ny - 1) : 0.0;
    return {x0 + ix * dx, y0 + iy * dy};
}

LevelField level_field(const KernelEngine& engine, const GridSpec& grid, double threshold) {
    if (grid.nx < 1 || grid.ny < 1)
        throw validation_error("level-set grid needs at least one node per axis");
    const int d = engine.dim();
    if (grid.coord < 0 || grid.coord >= d)
        throw validation_error("grid sweeps coordinate " + std::to_string(grid.coord) +
                               " but the measure has d = " + std::to_string(d));
    Eigen::VectorXcd base = grid.base;
    if (base.size() == 0) base = Eigen::VectorXcd::Zero(d);
    if (base.size() != d)
        throw validation_error("grid base point has dimension " + std::to_string(base.size()) +
                               ", expected " + std::to_string(d));

    LevelField field;
    field.grid = grid;
    field.grid.base = base;
    field.threshold = threshold;
    field.values.resize(grid.ny, grid.nx);
    field.mask.resize(grid.ny, grid.nx);

    Eigen::VectorXcd z = base;
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            z[grid.coord] = field.grid.node(ix, iy);
            const double k = kernel_diag(engine, z);
            field.values(iy, ix) = k;
            field.mask(iy, ix) = k <= threshold ? 1 : 0;
        }
    }
    return field;
}

} // namespace cdk
