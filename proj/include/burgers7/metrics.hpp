#pragma once

/// Error norms as printed in the benchmark tables, plus empirical-order
/// estimation for refinement studies. L2 carries the sqrt(h) factor; both
/// norms run over every supplied grid point. Summation is sequential
/// left-to-right so repeated runs are bit-identical.

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace burgers7 {

struct ErrorReport {
    double l2 = 0.0;
    double linf = 0.0;
    struct Point {
        double x = 0.0;
        double numeric = 0.0;
        double exact = 0.0;
        double abs_diff = 0.0;
    };
    std::vector<Point> pointwise;
    bool reliable = true;  ///< false when the reference values are untrusted
};

/// L2 = sqrt(h sum_j |numeric_j - exact_j|^2), Linf = max_j |.|.
inline ErrorReport error_norms(const Eigen::VectorXd& numeric,
                               const Eigen::VectorXd& exact, double h,
                               const Eigen::VectorXd* xs = nullptr,
                               bool reliable = true) {
    if (numeric.size() != exact.size())
        throw std::domain_error("error_norms: length mismatch");
    if (xs && xs->size() != numeric.size())
        throw std::domain_error("error_norms: abscissa length mismatch");
    ErrorReport report;
    report.reliable = reliable;
    double sumsq = 0.0;
    for (Eigen::Index j = 0; j < numeric.size(); ++j) {
        const double d = std::abs(numeric(j) - exact(j));
        sumsq += d * d;
        report.linf = std::max(report.linf, d);
        if (xs)
            report.pointwise.push_back({(*xs)(j), numeric(j), exact(j), d});
    }
    report.l2 = std::sqrt(h * sumsq);
    return report;
}

/// order_k = log2(e_k / e_{k+1}) for halving step sequences; a pair with a
/// zero (or negative) error has no defined order and yields nullopt.
inline std::vector<std::optional<double>> convergence_order(
    const std::vector<std::pair<double, double>>& errors) {
    if (errors.size() < 2)
        throw std::domain_error("convergence_order: need >= 2 entries");
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        const double ratio = errors[k].first / errors[k + 1].first;
        if (!(errors[k + 1].first > 0) ||
            std::abs(ratio - 2.0) > 1e-9 * ratio)
            throw std::domain_error(
                "convergence_order: steps must halve at each level");
    }
    std::vector<std::optional<double>> orders;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        const double e0 = errors[k].second, e1 = errors[k + 1].second;
        if (e0 > 0 && e1 > 0)
            orders.emplace_back(std::log2(e0 / e1));
        else
            orders.emplace_back(std::nullopt);
    }
    return orders;
}

/// Number of strict sign changes in the consecutive differences of a value
/// sequence; the oscillation detector for the inconsistent-BC comparison.
inline int sign_changes_in_differences(const Eigen::VectorXd& values) {
    if (values.size() < 3) return 0;
    int changes = 0;
    double prev = values(1) - values(0);
    for (Eigen::Index i = 1; i + 1 < values.size(); ++i) {
        const double next = values(i + 1) - values(i);
        if (prev * next < 0.0) ++changes;
        if (next != 0.0) prev = next;
    }
    return changes;
}

}  // namespace burgers7
