#include "cdk/ortho_basis.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace cdk {

namespace {

// Shape and positivity checks shared by the basis builders.  Coincident
// atoms are tolerated here (they only lower the rank); strict distinctness
// is enforced at ingestion by the cloud loaders.
void check_measure(const DiscreteMeasure& measure) {
    if (measure.size() == 0) throw validation_error("orthonormalization needs a non-empty measure");
    if (measure.atoms.rows() != measure.weights.size())
        throw validation_error("measure has " + std::to_string(measure.atoms.rows()) +
                               " atoms but " + std::to_string(measure.weights.size()) + " weights");
    for (Eigen::Index i = 0; i < measure.weights.size(); ++i)
        if (!std::isfinite(measure.weights[i]) || measure.weights[i] <= 0.0)
            throw validation_error("weight " + std::to_string(i) + " is not strictly positive");
}

std::pair<DiscreteMeasure, AffineMap> prepare(const DiscreteMeasure& measure,
                                              const OrthonormalizeOptions& opts) {
    if (opts.normalize) {
        const double mass = measure.total_mass();
        const Eigen::Index n = measure.size();
        const int d = measure.dim();

        Eigen::VectorXcd mean = Eigen::VectorXcd::Zero(d);
        for (Eigen::Index i = 0; i < n; ++i)
            mean += measure.weights[i] * measure.atoms.row(i).transpose();
        mean /= mass;
        Eigen::VectorXd spread = Eigen::VectorXd::Zero(d);
        for (Eigen::Index i = 0; i < n; ++i)
            spread =
                spread.cwiseMax((measure.atoms.row(i).transpose() - mean).cwiseAbs().eval());

        AffineMap map;
        map.scale.resize(d);
        map.shift.resize(d);
        for (int k = 0; k < d; ++k) {
            const double s = spread[k] > 0.0 ? spread[k] : 1.0;
            map.scale[k] = 1.0 / s;
            map.shift[k] = -mean[k] / s;
        }
        map.mass_scale = 1.0 / mass;

        DiscreteMeasure normalized;
        normalized.atoms = map.apply_rows(measure.atoms);
        normalized.weights = measure.weights / mass;
        return {std::move(normalized), std::move(map)};
    }
    return {measure, AffineMap::identity(measure.dim())};
}

} // namespace

OrthoBasis orthonormalize(const DiscreteMeasure& measure, const MonomialOrdering& ordering,
                          int n_target, const OrthonormalizeOptions& opts) {
    check_measure(measure);
    if (ordering.d != measure.dim())
        throw validation_error("ordering dimension " + std::to_string(ordering.d) +
                               " does not match measure dimension " +
                               std::to_string(measure.dim()));
    if (n_target < 0) throw validation_error("basis size n must be >= 0");
    if (static_cast<Eigen::Index>(n_target) + 1 > measure.size())
        throw validation_error("n + 1 = " + std::to_string(n_target + 1) +
                               " polynomials need at least that many atoms, measure has " +
                               std::to_string(measure.size()));
    if (opts.rank_tol <= 0.0) throw validation_error("rank tolerance must be positive");
    if (auto cap = ordering.capacity(); cap && n_target + 1 > *cap)
        throw validation_error("tensor ordering holds only " + std::to_string(*cap) +
                               " monomials, cannot produce " + std::to_string(n_target + 1) +
                               " basis members");

    auto [work, premap] = prepare(measure, opts);
    const Eigen::Index atom_count = work.size();
    const int want = n_target + 1;

    std::int64_t scan_bound =
        static_cast<std::int64_t>(std::max(2, opts.scan_factor)) * want;
    if (auto cap = ordering.capacity(); cap && scan_bound > *cap) scan_bound = *cap;

    const MonomialTable table = monomial_table(ordering, scan_bound);
    const Eigen::VectorXd& t = work.weights;
    const Eigen::VectorXcd tc = t.cast<std::complex<double>>();

    Eigen::MatrixXcd mono_cols(atom_count, scan_bound);  // monomial samples
    Eigen::MatrixXcd q(atom_count, want);                // orthonormal samples
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(scan_bound, want);
    std::vector<int> degree_indices;
    std::vector<NullRecord> null_records;

    int rank = 0;
    std::int64_t k = 0;
    for (; k < scan_bound && rank < want; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        if (table.parent[ku] < 0)
            mono_cols.col(k).setOnes();
        else
            mono_cols.col(k) =
                mono_cols.col(table.parent[ku]).cwiseProduct(work.atoms.col(table.var[ku]));

        Eigen::VectorXcd r = mono_cols.col(k);
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(k + 1);
        c[k] = 1.0;
        const double mono_norm = std::sqrt(t.dot(r.cwiseAbs2()));

        for (int pass = 0; pass < std::max(1, opts.passes); ++pass) {
            if (rank == 0) break;
            const Eigen::VectorXcd h = q.leftCols(rank).adjoint() * tc.cwiseProduct(r);
            r.noalias() -= q.leftCols(rank) * h;
            c.noalias() -= coeffs.topLeftCorner(k + 1, rank) * h;
        }
        const double rho = std::sqrt(t.dot(r.cwiseAbs2()));

        if (mono_norm > 0.0 && rho > opts.rank_tol * mono_norm) {
            q.col(rank) = r / rho;
            coeffs.col(rank).head(k + 1) = c / rho;
            // Projections never touch the leading entry, so the leading
            // coefficient is 1/rho: real and positive by construction.
            coeffs(k, rank) = std::complex<double>(1.0 / rho, 0.0);
            degree_indices.push_back(static_cast<int>(k));
            ++rank;
        } else {
            NullRecord rec;
            rec.monomial_index = static_cast<int>(k);
            rec.coeffs = c;
            null_records.push_back(std::move(rec));
        }
    }

    if (rank == 0)
        throw numerical_error("no nonzero monomial found on the support (empty basis)");

    OrthoBasis basis;
    basis.ordering = ordering;
    basis.n = rank - 1;
    basis.degree_indices = std::move(degree_indices);
    const int top = basis.degree_indices.back() + 1;
    basis.coeff_columns = coeffs.topLeftCorner(top, rank);
    basis.null_records = std::move(null_records);
    // Null records past the last accepted monomial carry no information for
    // the returned family; keep only those below the top monomial.
    basis.null_records.erase(
        std::remove_if(basis.null_records.begin(), basis.null_records.end(),
                       [&](const NullRecord& rec) { return rec.monomial_index >= top; }),
        basis.null_records.end());
    basis.table = monomial_table(ordering, top);
    basis.premap = premap;
    basis.value_scale = std::sqrt(premap.mass_scale);
    basis.sample_values = basis.value_scale * q.leftCols(rank);
    basis.rank_exhausted = rank < want;
    basis.defect = orthogonality_defect(basis, measure);
    return basis;
}

Eigen::VectorXcd OrthoBasis::evaluate(const Eigen::VectorXcd& z) const {
    if (z.size() != dim())
        throw validation_error("point dimension " + std::to_string(z.size()) +
                               " does not match basis dimension " + std::to_string(dim()));
    if (hessenberg) {
        const Eigen::MatrixXcd& h = *hessenberg;
        Eigen::VectorXcd v(n + 1);
        v[0] = value_scale * coeff_columns(0, 0).real();
        for (int r = 0; r + 1 <= n; ++r) {
            std::complex<double> acc = z[0] * v[r];
            for (int j = 0; j <= r; ++j) acc -= h(j, r) * v[j];
            v[r + 1] = acc / h(r + 1, r);
        }
        return v;
    }
    const Eigen::VectorXcd monos = table.values(premap.apply(z));
    return value_scale * (coeff_columns.transpose() * monos);
}

Eigen::MatrixXcd OrthoBasis::evaluate_rows(const Eigen::MatrixXcd& points) const {
    if (points.cols() != dim())
        throw validation_error("points have dimension " + std::to_string(points.cols()) +
                               ", basis expects " + std::to_string(dim()));
    if (hessenberg) {
        const Eigen::MatrixXcd& h = *hessenberg;
        Eigen::MatrixXcd v(points.rows(), n + 1);
        v.col(0).setConstant(value_scale * coeff_columns(0, 0).real());
        for (int r = 0; r + 1 <= n; ++r) {
            Eigen::VectorXcd acc = points.col(0).cwiseProduct(v.col(r));
            for (int j = 0; j <= r; ++j) acc -= h(j, r) * v.col(j);
            v.col(r + 1) = acc / h(r + 1, r);
        }
        return v;
    }
    const Eigen::MatrixXcd monos = table.values_at(premap.apply_rows(points));
    return value_scale * (monos * coeff_columns);
}

double orthogonality_defect(const OrthoBasis& basis, const DiscreteMeasure& measure) {
    if (basis.sample_values.rows() != measure.size())
        throw validation_error("basis sample values do not match the measure's atom count");
    Eigen::MatrixXcd gram = basis.sample_values.adjoint() *
                            measure.weights.asDiagonal() * basis.sample_values;
    gram -= Eigen::MatrixXcd::Identity(gram.rows(), gram.cols());
    gram = 0.5 * (gram + gram.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

} // namespace cdk
