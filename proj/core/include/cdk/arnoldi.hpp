#pragma once

#include "cdk/ortho_basis.hpp"

namespace cdk {

// Univariate (d = 1) alternative to the Gram-Schmidt scan: builds the same
// orthonormal family through degree n by applying the shift q -> z * q and
// orthogonalizing, which also yields the Hessenberg matrix H of the shift
// operator (stored in the result; see OrthoBasis::hessenberg).
//
// Requires d = 1 and n + 1 <= number of atoms.  When n + 1 equals the atom
// count the final subdiagonal entry of H is zero (the shifted polynomial
// already lies in the exhausted sample space); otherwise all subdiagonal
// entries are real and positive.
//
// Evaluation of an Arnoldi-built basis runs the three-term-style recurrence
//   p_{r+1}(z) = (z * p_r(z) - sum_{j<=r} H(j,r) p_j(z)) / H(r+1,r)
// instead of monomial accumulation.
OrthoBasis arnoldi_univariate(const DiscreteMeasure& measure, int n,
                              const OrthonormalizeOptions& opts = {});

} // namespace cdk
