#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cdk/conformal.hpp"
#include "cdk/multi_index.hpp"

namespace cdk {

// Green function of the unbounded complement of [-1, 1] with pole at
// infinity: g(z) = log|z + sqrt(z^2 - 1)| with the branch chosen so that
// the result is >= 0; zero on the interval.
double interval_green(std::complex<double> z);

// Sparse polynomial used by the polyhedron catalog entry.
struct PolyTerm {
    std::complex<double> coeff;
    MultiIndex alpha;
};

struct Polynomial {
    int d = 1;
    std::vector<PolyTerm> terms;

    int degree() const;
    std::complex<double> eval(const Eigen::VectorXcd& z) const;
};

// Catalog of pluripotential Green functions with pole at infinity for
// standard compacts in C^d.  Values are >= 0 and vanish on the compact.
struct GreenFunction {
    std::string kind;
    int d = 1;
    std::function<double(const Eigen::VectorXcd&)> eval;

    enum class BallNorm { Euclidean, Sup, One };

    // [-1, 1] in C.
    static GreenFunction interval();
    // { ||z - a|| <= r } for a complex norm: log+ of ||z - a|| / r.
    static GreenFunction complex_ball(const Eigen::VectorXcd& a, double r,
                                      BallNorm norm = BallNorm::Euclidean);
    // { max_j |p_j(z)|^{1/deg p_j} <= 1 }: max_j log+ |p_j(z)| / deg p_j.
    static GreenFunction polyhedron(std::vector<Polynomial> polys);
    // K x L: g(z, w) = max(g_K(z), g_L(w)) on concatenated coordinates.
    static GreenFunction product(GreenFunction k, GreenFunction l);
    // Real unit ball of R^d inside C^d:
    //   g(z) = (1/2) g_int(||z||^2 + |z.z - 1|),  z.z = sum z_j^2 bilinear.
    static GreenFunction real_ball(int d);
    // [-1, 1]^d: max_j g_int(z_j) (the product of intervals).
    static GreenFunction cube(int d);
    // { x real, x_j >= 0, sum x_j <= 1 }: g_int(|z_1| + ... + |z_d| + |z_1 + ... + z_d - 1|).
    static GreenFunction simplex(int d);
    // Growth exponent of the tensor-degree kernel on [-1, 1]^2:
    //   g(z) = g_int(z_1) + g_int(z_2).
    // This is the n-th root growth law for tensor enumerated kernels; the
    // genuine Green function of the square is cube(2).
    static GreenFunction tensor_square();
    // log+ |Phi(z)| for an exterior conformal map Phi (d = 1).
    static GreenFunction external_conformal(ConformalMap map);
};

double green_eval(const GreenFunction& g, const Eigen::VectorXcd& z);

// Points on (or dense near) the boundary of the compact belonging to each
// catalog kind, used by the vanishing checks; seeded and deterministic.
std::vector<Eigen::VectorXcd> green_boundary_samples(const GreenFunction& g,
                                                     int count,
                                                     std::uint64_t seed = 7);

} // namespace cdk
