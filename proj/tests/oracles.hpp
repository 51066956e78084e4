#pragma once

// Independent reference computations for the test suite.  Everything here
// runs at extended precision (long double) or through a different algorithm
// than the library under test, so agreement is evidence rather than
// tautology.  Test-only: never linked into the library or tools.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include <cdk/measure.hpp>
#include <cdk/multi_index.hpp>

namespace oracle {

using CLD = std::complex<long double>;
using MatXP = Eigen::Matrix<CLD, Eigen::Dynamic, Eigen::Dynamic>;
using VecXP = Eigen::Matrix<CLD, Eigen::Dynamic, 1>;

inline MatXP monomials_xp(const cdk::DiscreteMeasure& measure,
                          const std::vector<cdk::MultiIndex>& alphas) {
    const Eigen::Index n = measure.size();
    MatXP v(n, static_cast<Eigen::Index>(alphas.size()));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            CLD acc = 1.0L;
            for (int j = 0; j < measure.dim(); ++j) {
                const CLD zj(static_cast<long double>(measure.atoms(i, j).real()),
                             static_cast<long double>(measure.atoms(i, j).imag()));
                for (int p = 0; p < alphas[a][static_cast<std::size_t>(j)]; ++p) acc *= zj;
            }
            v(i, static_cast<Eigen::Index>(a)) = acc;
        }
    }
    return v;
}

struct GsResult {
    Eigen::MatrixXcd coeff_columns;
    std::vector<int> degree_indices;
    Eigen::MatrixXcd sample_values;
};

// Classical Gram-Schmidt over the monomial scan at long double precision,
// mirroring the skip rule: a monomial whose residual falls below rank_tol
// times its own norm is dropped.  No affine normalization is applied, so
// compare against bases built with OrthonormalizeOptions::normalize = false.
inline GsResult gram_schmidt_xp(const cdk::DiscreteMeasure& measure,
                                const cdk::MonomialOrdering& ordering, int n_target,
                                double rank_tol = 1e-8, int passes = 2,
                                int scan_factor = 4) {
    const Eigen::Index atom_count = measure.size();
    std::int64_t bound = static_cast<std::int64_t>(scan_factor) * (n_target + 1);
    if (auto cap = ordering.capacity(); cap && bound > *cap) bound = *cap;
    const auto alphas = cdk::enumerate_monomials(ordering, bound);
    const MatXP monos = monomials_xp(measure, alphas);

    Eigen::Matrix<long double, Eigen::Dynamic, 1> t(atom_count);
    for (Eigen::Index i = 0; i < atom_count; ++i)
        t[i] = static_cast<long double>(measure.weights[i]);

    auto wdot = [&](const VecXP& a, const VecXP& b) {
        CLD acc = 0.0L;
        for (Eigen::Index i = 0; i < atom_count; ++i) acc += t[i] * std::conj(a[i]) * b[i];
        return acc;
    };

    MatXP q(atom_count, n_target + 1);
    MatXP coeffs = MatXP::Zero(bound, n_target + 1);
    std::vector<int> degree_indices;
    int rank = 0;
    for (std::int64_t k = 0; k < bound && rank <= n_target; ++k) {
        VecXP r = monos.col(k);
        VecXP c = VecXP::Zero(k + 1);
        c[k] = 1.0L;
        const long double mono_norm = std::sqrt(std::real(wdot(r, r)));
        for (int pass = 0; pass < passes; ++pass) {
            for (int j = 0; j < rank; ++j) {
                const CLD h = wdot(q.col(j), r);
                r -= h * q.col(j);
                c.head(k + 1) -= h * coeffs.col(j).head(k + 1);
            }
        }
        const long double rho = std::sqrt(std::real(wdot(r, r)));
        if (mono_norm > 0.0L && rho > static_cast<long double>(rank_tol) * mono_norm) {
            q.col(rank) = r / rho;
            coeffs.col(rank).head(k + 1) = c / rho;
            degree_indices.push_back(static_cast<int>(k));
            ++rank;
        }
    }

    GsResult out;
    out.degree_indices = degree_indices;
    const int top = degree_indices.empty() ? 0 : degree_indices.back() + 1;
    out.coeff_columns.resize(top, rank);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < top; ++i)
            out.coeff_columns(i, j) = std::complex<double>(
                static_cast<double>(coeffs(i, j).real()), static_cast<double>(coeffs(i, j).imag()));
    out.sample_values.resize(atom_count, rank);
    for (int j = 0; j < rank; ++j)
        for (Eigen::Index i = 0; i < atom_count; ++i)
            out.sample_values(i, j) = std::complex<double>(
                static_cast<double>(q(i, j).real()), static_cast<double>(q(i, j).imag()));
    return out;
}

// Long double moment matrix over the first `count` monomials.
inline MatXP moment_matrix_xp(const cdk::DiscreteMeasure& measure,
                              const cdk::MonomialOrdering& ordering, std::int64_t count) {
    const auto alphas = cdk::enumerate_monomials(ordering, count);
    const MatXP v = monomials_xp(measure, alphas);
    MatXP m = MatXP::Zero(count, count);
    for (Eigen::Index i = 0; i < measure.size(); ++i)
        m += static_cast<long double>(measure.weights[i]) * (v.row(i).adjoint() * v.row(i));
    return m;
}

// Basis coefficients through the Cholesky factor of the moment matrix
// (full-rank clouds only): with M = R^* R upper triangular, the coefficient
// matrix is R^{-1}, whose diagonal is real positive.
inline Eigen::MatrixXcd cholesky_basis_xp(const cdk::DiscreteMeasure& measure,
                                          const cdk::MonomialOrdering& ordering, int n) {
    const std::int64_t count = n + 1;
    MatXP m = moment_matrix_xp(measure, ordering, count);
    // Hand-rolled Cholesky M = L L^*, then R = L^*.
    MatXP l = MatXP::Zero(count, count);
    for (Eigen::Index j = 0; j < count; ++j) {
        CLD diag = m(j, j);
        for (Eigen::Index k = 0; k < j; ++k) diag -= l(j, k) * std::conj(l(j, k));
        l(j, j) = std::sqrt(std::real(diag));
        for (Eigen::Index i = j + 1; i < count; ++i) {
            CLD acc = m(i, j);
            for (Eigen::Index k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
            l(i, j) = acc / l(j, j);
        }
    }
    // Invert the lower factor, then conjugate-transpose: coeffs = (L^{-1})^*.
    MatXP linv = MatXP::Identity(count, count);
    for (Eigen::Index j = 0; j < count; ++j)
        for (Eigen::Index i = j; i < count; ++i) {
            CLD acc = linv(i, j);
            for (Eigen::Index k = j; k < i; ++k) acc -= l(i, k) * linv(k, j);
            linv(i, j) = acc / l(i, i);
        }
    Eigen::MatrixXcd out(count, count);
    for (Eigen::Index i = 0; i < count; ++i)
        for (Eigen::Index j = 0; j < count; ++j) {
            const CLD v = std::conj(linv(j, i)); // (L^{-1})^* entry
            out(i, j) = std::complex<double>(static_cast<double>(v.real()),
                                             static_cast<double>(v.imag()));
        }
    return out;
}

// Equality-constrained least squares at long double precision:
//   min sum_i t_i |p(z_i)|^2  over  p in span{ z^{alpha(0)}, ..., z^{alpha(n)} }
//   subject to p(w_j) = c_j.
// KKT reduction: value = c^* (V M^{-1} V^*)^{-1} c with V the monomial rows
// at the constraint points.  Requires a full-rank moment matrix.
inline double constrained_lsq_xp(const cdk::DiscreteMeasure& measure,
                                 const cdk::MonomialOrdering& ordering, int n,
                                 const Eigen::MatrixXcd& points,
                                 const Eigen::VectorXcd& values) {
    const std::int64_t count = n + 1;
    const auto alphas = cdk::enumerate_monomials(ordering, count);
    const MatXP m = moment_matrix_xp(measure, ordering, count);

    cdk::DiscreteMeasure probe;
    probe.atoms = points;
    probe.weights = Eigen::VectorXd::Ones(points.rows());
    const MatXP v = monomials_xp(probe, alphas);

    const MatXP x = m.fullPivLu().solve(v.adjoint());
    const MatXP a = v * x;
    VecXP c(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i)
        c[i] = CLD(values[i].real(), values[i].imag());
    const VecXP y = a.fullPivLu().solve(c);
    CLD acc = 0.0L;
    for (Eigen::Index i = 0; i < c.size(); ++i) acc += std::conj(c[i]) * y[i];
    return static_cast<double>(std::real(acc));
}

// Deterministic random helpers; explicit bit-stable uniforms.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double u01() { return std::ldexp(static_cast<double>(gen() >> 11), -53); }
    double uniform(double a, double b) { return a + (b - a) * u01(); }

    std::complex<double> box(double half_width = 1.0) {
        const double re = uniform(-half_width, half_width);
        return {re, uniform(-half_width, half_width)};
    }

    std::complex<double> in_disk(double radius = 1.0) {
        for (;;) {
            const std::complex<double> z = box(1.0);
            if (std::norm(z) <= 1.0) return radius * z;
        }
    }
};

inline cdk::DiscreteMeasure random_cloud(Rng& rng, int d, Eigen::Index count,
                                         bool random_weights = false, double half_width = 1.0) {
    cdk::DiscreteMeasure m;
    m.atoms.resize(count, d);
    for (Eigen::Index i = 0; i < count; ++i)
        for (int j = 0; j < d; ++j) m.atoms(i, j) = rng.box(half_width);
    if (random_weights) {
        m.weights.resize(count);
        for (Eigen::Index i = 0; i < count; ++i) m.weights[i] = rng.uniform(0.2, 2.0);
    } else {
        m.weights = Eigen::VectorXd::Constant(count, 1.0 / static_cast<double>(count));
    }
    return m;
}

} // namespace oracle
