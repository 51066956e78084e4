#pragma once

#include <complex>
#include <functional>
#include <string>

namespace cdk {

// Conformal map Phi of the exterior of a compact G onto the exterior of the
// unit disk, Phi(inf) = inf with positive derivative there; |Phi| > 1
// outside the closure of G, |Phi| -> 1 on the outer boundary Gamma.
struct ConformalMap {
    std::string label;
    std::function<std::complex<double>(std::complex<double>)> phi;
    std::function<std::complex<double>(std::complex<double>)> dphi;

    // Unit disk: Phi(z) = z.
    static ConformalMap disk();
    // Disk of radius r centered at c: Phi(z) = (z - c) / r.
    static ConformalMap disk(std::complex<double> center, double radius);
    // Ellipse with foci +-1, the image of |u| <= R (R > 1) under the
    // Joukowski map u -> (u + 1/u)/2; semiaxes a = (R + 1/R)/2 and
    // b = (R - 1/R)/2.  Phi(z) = (z + sqrt(z^2 - 1)) / R with the branch
    // |z + sqrt(z^2 - 1)| >= 1.
    static ConformalMap ellipse(double R);
};

// The branch of z + sqrt(z^2 - 1) with modulus >= 1 (the inverse Joukowski
// coordinate); shared by the interval Green function and the ellipse map.
std::complex<double> joukowski_exterior(std::complex<double> z);

} // namespace cdk
