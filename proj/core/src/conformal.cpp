#include "cdk/conformal.hpp"

#include <cmath>

#include "cdk/errors.hpp"

namespace cdk {

std::complex<double> joukowski_exterior(std::complex<double> z) {
    const std::complex<double> s = std::sqrt(z * z - 1.0);
    const std::complex<double> w = z + s;
    // The two candidates z +- sqrt(z^2 - 1) are reciprocal; pick the one
    // outside (or on) the unit circle.
    return std::abs(w) >= 1.0 ? w : z - s;
}

ConformalMap ConformalMap::disk() { return disk(0.0, 1.0); }

ConformalMap ConformalMap::disk(std::complex<double> center, double radius) {
    if (!(radius > 0.0)) throw validation_error("disk radius must be positive");
    ConformalMap m;
    m.label = "disk";
    m.phi = [center, radius](std::complex<double> z) { return (z - center) / radius; };
    m.dphi = [radius](std::complex<double>) { return std::complex<double>(1.0 / radius, 0.0); };
    return m;
}

ConformalMap ConformalMap::ellipse(double R) {
    if (!(R > 1.0)) throw validation_error("ellipse parameter R must be > 1");
    ConformalMap m;
    m.label = "ellipse";
    m.phi = [R](std::complex<double> z) { return joukowski_exterior(z) / R; };
    // Phi'(z) = Phi(z) / sqrt(z^2 - 1) with the same branch as Phi.
    m.dphi = [R](std::complex<double> z) {
        const std::complex<double> w = joukowski_exterior(z);
        // w = z + s with s the branch actually taken, so s = w - z.
        const std::complex<double> s = w - z;
        if (std::abs(s) == 0.0)
            throw numerical_error("ellipse map derivative is singular at a focus");
        return w / (R * s);
    };
    return m;
}

} // namespace cdk
