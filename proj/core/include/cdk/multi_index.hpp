#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cdk {

// Exponent vector of a monomial z^alpha = z_1^{a_1} ... z_d^{a_d}.
using MultiIndex = std::vector<int>;

// Total degree |alpha| = a_1 + ... + a_d.
int order(const MultiIndex& alpha);

// A linear enumeration alpha(0), alpha(1), ... of monomials in d variables.
//
// GradedLex lists monomials by ascending total degree; inside a degree block
// the first coordinate descends, recursively applying the same rule to the
// remaining coordinates.  For d = 2 the enumeration starts
//   (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), (3,0), (2,1), (1,2), (0,3), ...
//
// Tensor restricts the same comparison to the box {0,...,m}^d, where m is
// max_partial_degree; its capacity is (m+1)^d.
struct MonomialOrdering {
    enum class Kind { GradedLex, Tensor };

    Kind kind = Kind::GradedLex;
    int d = 1;
    int max_partial_degree = -1; // Tensor only

    static MonomialOrdering graded_lex(int d);
    static MonomialOrdering tensor(int d, int max_partial_degree);

    // Number of monomials the ordering can produce; empty for GradedLex.
    std::optional<std::int64_t> capacity() const;

    bool operator==(const MonomialOrdering& other) const = default;
};

// First `count` multi-indices of the ordering.  Every prefix is
// downward-closed: alpha - e_j precedes alpha whenever it is a valid index.
// Throws validation_error if count exceeds the ordering's capacity or is
// negative.
std::vector<MultiIndex> enumerate_monomials(const MonomialOrdering& ordering,
                                            std::int64_t count);

// Enumeration prefix together with parent links: for every non-constant
// monomial, parent[i] is the position of alpha(i) - e_{var[i]}, so the value
// of monomial i at a point costs one multiplication given its parent's value.
struct MonomialTable {
    MonomialOrdering ordering;
    std::vector<MultiIndex> alphas;
    std::vector<int> parent; // -1 for the constant monomial
    std::vector<int> var;    // coordinate multiplied relative to the parent

    Eigen::Index size() const { return static_cast<Eigen::Index>(alphas.size()); }

    // Values z^{alpha(0)}, ..., z^{alpha(count-1)} at one point.
    Eigen::VectorXcd values(const Eigen::VectorXcd& z) const;

    // One row of values per point; points are rows of an N x d matrix.
    Eigen::MatrixXcd values_at(const Eigen::MatrixXcd& points) const;
};

MonomialTable monomial_table(const MonomialOrdering& ordering, std::int64_t count);

// Parses "graded-lex" or "tensor:<m>" for dimension d.
MonomialOrdering parse_ordering(const std::string& text, int d);

std::string to_string(const MonomialOrdering& ordering);

} // namespace cdk
