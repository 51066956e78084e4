#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "cdk/measure.hpp"

namespace cdk {

// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int m);

// Area (Lebesgue) measure of the disk of radius rho centered at c,
// discretized so that all moments integral z^a conj(z)^b dA with
// a + b <= exact_through are reproduced to machine precision.
// Mass = pi rho^2.
QuadratureMeasure disk_area_quadrature(int exact_through,
                                       std::complex<double> center = 0.0,
                                       double rho = 1.0);

// Area measure of the ellipse with foci +-1 given by Joukowski parameter
// R > 1 (semiaxes a = (R + 1/R)/2, b = (R - 1/R)/2); exact for moments of
// total degree <= exact_through.  Mass = pi a b.
QuadratureMeasure ellipse_area_quadrature(int exact_through, double R);

// Product Chebyshev (arc-sine) probability measure on [-1, 1]^2 with m
// Gauss-Chebyshev nodes per axis: x_i = cos((2i+1) pi / (2m)), weight 1/m;
// exact for polynomials of partial degree <= 2m - 1 per axis.  Mass = 1.
QuadratureMeasure chebyshev_tensor_quadrature(int m);

} // namespace cdk
