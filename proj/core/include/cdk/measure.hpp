#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

#include "cdk/errors.hpp"

namespace cdk {

// Finite positive measure sum_i t_i * delta(z_i) on C^d.  Atoms are the rows
// of an N x d complex matrix, weights are strictly positive reals.
struct DiscreteMeasure {
    Eigen::MatrixXcd atoms;  // N x d
    Eigen::VectorXd weights; // N

    int dim() const { return static_cast<int>(atoms.cols()); }
    Eigen::Index size() const { return atoms.rows(); }
    double total_mass() const { return weights.sum(); }

    // Atom i as a column vector of length d.
    Eigen::VectorXcd atom(Eigen::Index i) const { return atoms.row(i).transpose(); }

    // Shape agreement, strict weight positivity, finite entries, pairwise
    // distinct atoms.  Throws validation_error naming the offending indices.
    void validate() const;
};

// Discrete stand-in for a continuous measure, produced by a quadrature rule.
struct QuadratureMeasure : DiscreteMeasure {
    std::string label;       // e.g. "disk-area"
    double target_mass = 0;  // mass of the continuous measure
    double mass_tol = 1e-10;

    // DiscreteMeasure checks plus |total_mass - target_mass| <= mass_tol.
    void validate() const;
};

// Diagonal affine change of variables z -> scale .* z + shift with an
// associated mass factor.  If map normalizes mu to mu~ then kernels satisfy
//   K_n^mu(z, w) = mass_scale * K_n^{mu~}(apply(z), apply(w)).
struct AffineMap {
    Eigen::VectorXcd scale;
    Eigen::VectorXcd shift;
    double mass_scale = 1.0;

    static AffineMap identity(int d);

    int dim() const { return static_cast<int>(scale.size()); }
    Eigen::VectorXcd apply(const Eigen::VectorXcd& z) const;
    Eigen::VectorXcd invert(const Eigen::VectorXcd& w) const;
    Eigen::MatrixXcd apply_rows(const Eigen::MatrixXcd& points) const;
    bool is_identity(double tol = 0.0) const;
};

// Centers each coordinate at the weighted mean, scales so the largest
// modulus per coordinate is 1 (degenerate coordinates keep scale 1), and
// scales weights to total mass 1.  Returns the normalized measure and the
// map T with mass factor c such that K^mu(z,w) = c * K^{normalized}(Tz, Tw).
// Requires at least one atom; a second call on the output yields the
// identity map.
std::pair<DiscreteMeasure, AffineMap> normalize_cloud(const DiscreteMeasure& measure);

// Interprets an N x (2d) real matrix of coordinate pairs (x_1, y_1, ..., x_d, y_d)
// as atoms x_k + i y_k in C^d.  Empty weights default to 1/N each.
DiscreteMeasure embed_real_pairs(const Eigen::MatrixXd& cloud,
                                 const Eigen::VectorXd& weights = Eigen::VectorXd());

} // namespace cdk
