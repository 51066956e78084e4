#include "cdk/leverage.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cdk {

double default_leverage_threshold(const Eigen::VectorXd& scores, double q, double kappa) {
    if (scores.size() == 0) throw validation_error("no scores to threshold");
    std::vector<double> sorted(scores.data(), scores.data() + scores.size());
    std::sort(sorted.begin(), sorted.end());
    // Nearest-rank quantile.
    const auto idx = static_cast<std::size_t>(
        std::min<double>(static_cast<double>(sorted.size()) - 1.0,
                         std::max(0.0, std::ceil(q * static_cast<double>(sorted.size())) - 1.0)));
    return std::max(0.5, kappa * sorted[idx]);
}

LeverageReport leverage_scores(const KernelEngine& engine, double threshold) {
    LeverageReport report;
    // tau_j = t_j K_n(z_j, z_j) = t_j ||v(z_j)||^2, straight from the sample
    // values the basis already carries.
    report.scores = engine.measure.weights.cwiseProduct(
        engine.basis.sample_values.rowwise().squaredNorm());
    report.sum = report.scores.sum();
    report.threshold = threshold < 0.0 ? default_leverage_threshold(report.scores) : threshold;
    for (Eigen::Index i = 0; i < report.scores.size(); ++i)
        if (report.scores[i] > report.threshold) report.flagged.push_back(i);
    return report;
}

} // namespace cdk
