#include "cdk/moment_matrix.hpp"

#include <Eigen/Eigenvalues>

namespace cdk {

MomentMatrix build_moment_matrix(const DiscreteMeasure& measure,
                                 const MonomialOrdering& ordering, int k) {
    if (k < 0) throw validation_error("moment matrix index must be >= 0, got " + std::to_string(k));
    if (measure.size() == 0) throw validation_error("moment matrix needs a non-empty measure");
    if (measure.dim() != ordering.d)
        throw validation_error("measure dimension " + std::to_string(measure.dim()) +
                               " does not match ordering dimension " + std::to_string(ordering.d));

    const MonomialTable table = monomial_table(ordering, static_cast<std::int64_t>(k) + 1);
    const Eigen::MatrixXcd v = table.values_at(measure.atoms);

    MomentMatrix m;
    m.ordering = ordering;
    m.k = k;
    m.entries = v.adjoint() * measure.weights.asDiagonal() * v;
    // Exact Hermitian symmetrization to absorb roundoff.
    m.entries = 0.5 * (m.entries + m.entries.adjoint()).eval();
    return m;
}

int hermitian_rank(const Eigen::MatrixXcd& m, double rel_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double top = ev.cwiseAbs().maxCoeff();
    if (top <= 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev[i] > rel_tol * top) ++rank;
    return rank;
}

} // namespace cdk
