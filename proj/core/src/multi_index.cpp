#include "cdk/multi_index.hpp"

#include <map>
#include <numeric>

#include "cdk/errors.hpp"

namespace cdk {

int order(const MultiIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

MonomialOrdering MonomialOrdering::graded_lex(int d) {
    if (d < 1) throw validation_error("ordering dimension must be >= 1, got " + std::to_string(d));
    MonomialOrdering o;
    o.kind = Kind::GradedLex;
    o.d = d;
    return o;
}

MonomialOrdering MonomialOrdering::tensor(int d, int max_partial_degree) {
    if (d < 1) throw validation_error("ordering dimension must be >= 1, got " + std::to_string(d));
    if (max_partial_degree < 0)
        throw validation_error("tensor ordering needs max partial degree >= 0, got " +
                               std::to_string(max_partial_degree));
    MonomialOrdering o;
    o.kind = Kind::Tensor;
    o.d = d;
    o.max_partial_degree = max_partial_degree;
    return o;
}

std::optional<std::int64_t> MonomialOrdering::capacity() const {
    if (kind == Kind::GradedLex) return std::nullopt;
    std::int64_t cap = 1;
    for (int j = 0; j < d; ++j) {
        cap *= static_cast<std::int64_t>(max_partial_degree) + 1;
        if (cap > (std::int64_t(1) << 40)) return cap; // far beyond anything usable
    }
    return cap;
}

namespace {

// Emits the degree-m block in first-coordinate-descending order; returns
// false once `count` indices have been collected.  The tensor box constraint
// (entries <= box) prunes branches; box < 0 means unconstrained.
bool emit_block(std::vector<MultiIndex>& out, MultiIndex& scratch, int pos, int remaining,
                int box, std::int64_t count) {
    const int d = static_cast<int>(scratch.size());
    if (pos == d - 1) {
        if (box >= 0 && remaining > box) return true;
        scratch[pos] = remaining;
        out.push_back(scratch);
        return static_cast<std::int64_t>(out.size()) < count;
    }
    int hi = remaining;
    if (box >= 0 && hi > box) hi = box;
    for (int a = hi; a >= 0; --a) {
        scratch[pos] = a;
        if (!emit_block(out, scratch, pos + 1, remaining - a, box, count)) return false;
    }
    return true;
}

} // namespace

std::vector<MultiIndex> enumerate_monomials(const MonomialOrdering& ordering,
                                            std::int64_t count) {
    if (count < 0)
        throw validation_error("monomial count must be >= 0, got " + std::to_string(count));
    if (auto cap = ordering.capacity(); cap && count > *cap)
        throw validation_error("tensor ordering holds only " + std::to_string(*cap) +
                               " monomials, requested " + std::to_string(count));

    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 0) return out;

    const int box =
        ordering.kind == MonomialOrdering::Kind::Tensor ? ordering.max_partial_degree : -1;
    const int max_degree = box >= 0 ? box * ordering.d : -1;
    MultiIndex scratch(static_cast<std::size_t>(ordering.d), 0);
    for (int m = 0;; ++m) {
        if (max_degree >= 0 && m > max_degree) break;
        if (!emit_block(out, scratch, 0, m, box, count)) break;
    }
    return out;
}

Eigen::VectorXcd MonomialTable::values(const Eigen::VectorXcd& z) const {
    if (z.size() != ordering.d)
        throw validation_error("point has dimension " + std::to_string(z.size()) +
                               ", ordering expects " + std::to_string(ordering.d));
    Eigen::VectorXcd v(size());
    for (Eigen::Index i = 0; i < size(); ++i)
        v[i] = parent[static_cast<std::size_t>(i)] < 0
                   ? std::complex<double>(1.0)
                   : v[parent[static_cast<std::size_t>(i)]] * z[var[static_cast<std::size_t>(i)]];
    return v;
}

Eigen::MatrixXcd MonomialTable::values_at(const Eigen::MatrixXcd& points) const {
    if (points.cols() != ordering.d)
        throw validation_error("points have dimension " + std::to_string(points.cols()) +
                               ", ordering expects " + std::to_string(ordering.d));
    Eigen::MatrixXcd v(points.rows(), size());
    for (Eigen::Index i = 0; i < size(); ++i) {
        const auto q = static_cast<std::size_t>(i);
        if (parent[q] < 0)
            v.col(i).setOnes();
        else
            v.col(i) = v.col(parent[q]).cwiseProduct(points.col(var[q]));
    }
    return v;
}

MonomialTable monomial_table(const MonomialOrdering& ordering, std::int64_t count) {
    MonomialTable t;
    t.ordering = ordering;
    t.alphas = enumerate_monomials(ordering, count);
    t.parent.assign(t.alphas.size(), -1);
    t.var.assign(t.alphas.size(), 0);

    std::map<MultiIndex, int> position;
    for (std::size_t i = 0; i < t.alphas.size(); ++i) {
        const MultiIndex& alpha = t.alphas[i];
        position.emplace(alpha, static_cast<int>(i));
        for (int j = 0; j < ordering.d; ++j) {
            if (alpha[static_cast<std::size_t>(j)] == 0) continue;
            MultiIndex down = alpha;
            --down[static_cast<std::size_t>(j)];
            auto it = position.find(down);
            if (it != position.end()) {
                t.parent[i] = it->second;
                t.var[i] = j;
                break;
            }
        }
        if (order(alpha) > 0 && t.parent[i] < 0)
            throw numerical_error("enumeration prefix is not downward closed");
    }
    return t;
}

MonomialOrdering parse_ordering(const std::string& text, int d) {
    if (text == "graded-lex") return MonomialOrdering::graded_lex(d);
    const std::string prefix = "tensor:";
    if (text.rfind(prefix, 0) == 0) {
        try {
            std::size_t used = 0;
            const int m = std::stoi(text.substr(prefix.size()), &used);
            if (used != text.size() - prefix.size())
                throw validation_error("trailing characters in ordering '" + text + "'");
            return MonomialOrdering::tensor(d, m);
        } catch (const validation_error&) {
            throw;
        } catch (const std::exception&) {
            throw validation_error("cannot parse tensor degree in ordering '" + text + "'");
        }
    }
    throw validation_error("unknown ordering '" + text + "' (expected graded-lex or tensor:<m>)");
}

std::string to_string(const MonomialOrdering& ordering) {
    if (ordering.kind == MonomialOrdering::Kind::GradedLex) return "graded-lex";
    return "tensor:" + std::to_string(ordering.max_partial_degree);
}

} // namespace cdk
