#include "cdk/measure.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace cdk {

namespace {

// Atom rows compared exactly; duplicates are bitwise-equal coordinates.
struct RowLess {
    const Eigen::MatrixXcd* atoms;
    bool operator()(Eigen::Index a, Eigen::Index b) const {
        for (Eigen::Index c = 0; c < atoms->cols(); ++c) {
            const auto &x = (*atoms)(a, c), &y = (*atoms)(b, c);
            if (x.real() != y.real()) return x.real() < y.real();
            if (x.imag() != y.imag()) return x.imag() < y.imag();
        }
        return false;
    }
};

} // namespace

void DiscreteMeasure::validate() const {
    if (atoms.rows() != weights.size())
        throw validation_error("measure has " + std::to_string(atoms.rows()) + " atoms but " +
                               std::to_string(weights.size()) + " weights");
    if (atoms.rows() == 0) throw validation_error("measure has no atoms");
    if (atoms.cols() < 1) throw validation_error("measure atoms need at least one coordinate");
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i]) || weights[i] <= 0.0)
            throw validation_error("weight " + std::to_string(i) + " is not strictly positive");
    }
    for (Eigen::Index i = 0; i < atoms.rows(); ++i)
        for (Eigen::Index c = 0; c < atoms.cols(); ++c)
            if (!std::isfinite(atoms(i, c).real()) || !std::isfinite(atoms(i, c).imag()))
                throw validation_error("atom " + std::to_string(i) + " has a non-finite coordinate");

    std::map<Eigen::Index, Eigen::Index, RowLess> seen{RowLess{&atoms}};
    for (Eigen::Index i = 0; i < atoms.rows(); ++i) {
        auto [it, inserted] = seen.emplace(i, i);
        if (!inserted)
            throw validation_error("atoms " + std::to_string(it->second) + " and " +
                                   std::to_string(i) + " coincide");
    }
}

void QuadratureMeasure::validate() const {
    DiscreteMeasure::validate();
    const double mass = total_mass();
    if (std::abs(mass - target_mass) > mass_tol)
        throw validation_error("quadrature mass " + std::to_string(mass) + " misses target " +
                               std::to_string(target_mass));
}

AffineMap AffineMap::identity(int d) {
    AffineMap map;
    map.scale = Eigen::VectorXcd::Ones(d);
    map.shift = Eigen::VectorXcd::Zero(d);
    map.mass_scale = 1.0;
    return map;
}

Eigen::VectorXcd AffineMap::apply(const Eigen::VectorXcd& z) const {
    if (z.size() != scale.size())
        throw validation_error("point dimension " + std::to_string(z.size()) +
                               " does not match map dimension " + std::to_string(scale.size()));
    return scale.cwiseProduct(z) + shift;
}

Eigen::VectorXcd AffineMap::invert(const Eigen::VectorXcd& w) const {
    if (w.size() != scale.size())
        throw validation_error("point dimension " + std::to_string(w.size()) +
                               " does not match map dimension " + std::to_string(scale.size()));
    return (w - shift).cwiseQuotient(scale);
}

Eigen::MatrixXcd AffineMap::apply_rows(const Eigen::MatrixXcd& points) const {
    if (points.cols() != scale.size())
        throw validation_error("points have dimension " + std::to_string(points.cols()) +
                               ", map expects " + std::to_string(scale.size()));
    Eigen::MatrixXcd out = points;
    out *= scale.asDiagonal();
    out.rowwise() += shift.transpose();
    return out;
}

bool AffineMap::is_identity(double tol) const {
    return (scale - Eigen::VectorXcd::Ones(scale.size())).lpNorm<Eigen::Infinity>() <= tol &&
           shift.lpNorm<Eigen::Infinity>() <= tol && std::abs(mass_scale - 1.0) <= tol;
}

std::pair<DiscreteMeasure, AffineMap> normalize_cloud(const DiscreteMeasure& measure) {
    measure.validate();
    const Eigen::Index n = measure.size();
    const int d = measure.dim();
    const double mass = measure.total_mass();

    Eigen::VectorXcd mean = Eigen::VectorXcd::Zero(d);
    for (Eigen::Index i = 0; i < n; ++i)
        mean += measure.weights[i] * measure.atoms.row(i).transpose();
    mean /= mass;

    Eigen::VectorXd spread = Eigen::VectorXd::Zero(d);
    for (Eigen::Index i = 0; i < n; ++i)
        spread = spread.cwiseMax(
            (measure.atoms.row(i).transpose() - mean).cwiseAbs().eval());

    AffineMap map;
    map.scale.resize(d);
    map.shift.resize(d);
    for (int k = 0; k < d; ++k) {
        // A coordinate whose atoms all coincide keeps unit scale.
        const double s = spread[k] > 0.0 ? spread[k] : 1.0;
        map.scale[k] = 1.0 / s;
        map.shift[k] = -mean[k] / s;
    }
    map.mass_scale = 1.0 / mass;

    DiscreteMeasure normalized;
    normalized.atoms = map.apply_rows(measure.atoms);
    normalized.weights = measure.weights / mass;
    return {normalized, map};
}

DiscreteMeasure embed_real_pairs(const Eigen::MatrixXd& cloud, const Eigen::VectorXd& weights) {
    if (cloud.cols() < 2 || cloud.cols() % 2 != 0)
        throw validation_error("real embedding needs an even number of columns (pairs re, im), got " +
                               std::to_string(cloud.cols()));
    const Eigen::Index n = cloud.rows();
    const Eigen::Index d = cloud.cols() / 2;

    DiscreteMeasure m;
    m.atoms.resize(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < d; ++k)
            m.atoms(i, k) = std::complex<double>(cloud(i, 2 * k), cloud(i, 2 * k + 1));
    if (weights.size() == 0)
        m.weights = Eigen::VectorXd::Constant(n, n > 0 ? 1.0 / static_cast<double>(n) : 1.0);
    else if (weights.size() == n)
        m.weights = weights;
    else
        throw validation_error("weight count " + std::to_string(weights.size()) +
                               " does not match atom count " + std::to_string(n));
    m.validate();
    return m;
}

} // namespace cdk
