#include "cdk/arnoldi.hpp"

#include <cmath>

namespace cdk {

OrthoBasis arnoldi_univariate(const DiscreteMeasure& measure, int n,
                              const OrthonormalizeOptions& opts) {
    if (measure.dim() != 1)
        throw validation_error("the Arnoldi path handles one complex variable, measure has d = " +
                               std::to_string(measure.dim()));
    if (n < 0) throw validation_error("basis size n must be >= 0");
    if (measure.size() == 0) throw validation_error("orthonormalization needs a non-empty measure");
    if (static_cast<Eigen::Index>(n) + 1 > measure.size())
        throw validation_error("n + 1 = " + std::to_string(n + 1) +
                               " polynomials need at least that many atoms, measure has " +
                               std::to_string(measure.size()));
    if (opts.rank_tol <= 0.0) throw validation_error("rank tolerance must be positive");

    // Reuse the scanning builder's normalization policy through a degree-0
    // run; its premap is what the scan would use.
    const MonomialOrdering ordering = MonomialOrdering::graded_lex(1);
    OrthoBasis seed = orthonormalize(measure, ordering, 0, opts);
    const AffineMap premap = seed.premap;

    const Eigen::VectorXcd z_mapped =
        (premap.scale[0] * measure.atoms.col(0).array() + premap.shift[0]).matrix();
    const Eigen::VectorXd t = measure.weights * premap.mass_scale;
    const Eigen::VectorXcd tc = t.cast<std::complex<double>>();
    const Eigen::Index atom_count = measure.size();

    Eigen::MatrixXcd q(atom_count, n + 2);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n + 2, n + 1);
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(n + 1, n + 1);

    const double mass = t.sum(); // 1 when normalizing
    q.col(0).setConstant(1.0 / std::sqrt(mass));
    coeffs(0, 0) = 1.0 / std::sqrt(mass);

    int rank = 1;
    bool exhausted = false;
    for (int r = 0; r <= n; ++r) {
        Eigen::VectorXcd u = z_mapped.cwiseProduct(q.col(r));
        const double u_norm = std::sqrt(t.dot(u.cwiseAbs2()));
        for (int pass = 0; pass < std::max(1, opts.passes); ++pass) {
            const Eigen::VectorXcd proj = q.leftCols(r + 1).adjoint() * tc.cwiseProduct(u);
            u.noalias() -= q.leftCols(r + 1) * proj;
            h.col(r).head(r + 1) += proj;
        }
        const double rho = std::sqrt(t.dot(u.cwiseAbs2()));
        if (rho <= opts.rank_tol * std::max(u_norm, 1e-300)) {
            // The sample space is exhausted: z * p_r already lies in the
            // current span.  Record a zero subdiagonal and stop.
            h(r + 1, r) = 0.0;
            exhausted = r < n;
            break;
        }
        h(r + 1, r) = rho;
        q.col(r + 1) = u / rho;
        if (r + 1 <= n) {
            // Coefficient recurrence mirrors the sample recurrence: multiply
            // by the premapped variable (shift rows down by one).
            Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
            c.segment(1, r + 1) = coeffs.col(r).head(r + 1);
            c.head(r + 1) -= coeffs.leftCols(r + 1).topRows(r + 1) * h.col(r).head(r + 1);
            coeffs.col(r + 1) = c / rho;
            ++rank;
        }
    }

    OrthoBasis basis;
    basis.ordering = ordering;
    basis.n = rank - 1;
    basis.degree_indices.resize(static_cast<std::size_t>(rank));
    for (int j = 0; j < rank; ++j) basis.degree_indices[static_cast<std::size_t>(j)] = j;
    basis.coeff_columns = coeffs.topLeftCorner(rank, rank);
    basis.table = monomial_table(ordering, rank);
    basis.premap = premap;
    basis.value_scale = std::sqrt(premap.mass_scale);
    basis.sample_values = basis.value_scale * q.leftCols(rank);
    basis.rank_exhausted = exhausted;

    // Translate the Hessenberg matrix back to the original coordinate
    // z = (z~ - b) / B: entries (H - b I) / B keep the shift identity
    // z * v_n(z) = v_{n+1}(z) * H on the atoms, subdiagonal stays positive.
    const std::complex<double> b = premap.shift[0];
    const double scale = premap.scale[0].real();
    Eigen::MatrixXcd h_orig = h.topLeftCorner(rank + 1, rank);
    for (int c = 0; c < rank; ++c) h_orig(c, c) -= b;
    basis.hessenberg = h_orig / scale;

    basis.defect = orthogonality_defect(basis, measure);
    return basis;
}

} // namespace cdk
