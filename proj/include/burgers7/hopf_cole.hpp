#pragma once

/// Hopf-Cole transformation between the advection profile w and the heat
/// variable psi: psi = exp(-I/nu_d) with I(x) the antiderivative of the
/// initial profile, and w = -nu_d psi_x / psi on the way back. The forward
/// map normalizes in log space before exponentiating so that stiff profiles
/// (small nu_d) underflow gracefully instead of producing zeros everywhere.

#include "burgers7/grid.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace burgers7 {

/// Five-point Gauss-Legendre rule on [-1, 1]; exact through degree 9.
struct GaussLegendre5 {
    std::array<double, 5> nodes;
    std::array<double, 5> weights;

    GaussLegendre5() {
        const double r = std::sqrt(10.0 / 7.0);
        const double inner = std::sqrt(5.0 - 2.0 * r) / 3.0;
        const double outer = std::sqrt(5.0 + 2.0 * r) / 3.0;
        const double s70 = std::sqrt(70.0);
        nodes = {0.0, -inner, inner, -outer, outer};
        weights = {128.0 / 225.0, (322.0 + 13.0 * s70) / 900.0,
                   (322.0 + 13.0 * s70) / 900.0, (322.0 - 13.0 * s70) / 900.0,
                   (322.0 - 13.0 * s70) / 900.0};
    }

    double integrate(const std::function<double(double)>& f, double a,
                     double b) const {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double acc = 0.0;
        for (int q = 0; q < 5; ++q)
            acc += weights[q] * f(mid + half * nodes[q]);
        return half * acc;
    }
};

/// Cumulative antiderivative of f at every grid node, anchored at a0:
/// I_0 = 0 and I_{i+1} = I_i + per-cell quadrature.
inline Eigen::VectorXd cumulative_integral(
    const std::function<double(double)>& f, const GridSpec& grid,
    int panels_per_cell = 1) {
    if (panels_per_cell < 1)
        throw std::domain_error("cumulative_integral: panels_per_cell >= 1");
    static const GaussLegendre5 rule;
    Eigen::VectorXd integral(grid.nodes());
    integral(0) = 0.0;
    for (int i = 0; i < grid.N; ++i) {
        double cell = 0.0;
        const double a = grid.x(i);
        const double dx = grid.h / panels_per_cell;
        for (int p = 0; p < panels_per_cell; ++p)
            cell += rule.integrate(f, a + p * dx, a + (p + 1) * dx);
        if (!std::isfinite(cell))
            throw std::domain_error(
                "cumulative_integral: non-finite integrand sample in cell " +
                std::to_string(i));
        integral(i + 1) = integral(i) + cell;
    }
    return integral;
}

/// psi_i proportional to exp(-I_i/nu_d), rescaled so max(psi) = 1. The common
/// factor is immaterial: the heat step is linear and the inverse transform is
/// scale-free.
inline Eigen::VectorXd psi_from_integral(const Eigen::VectorXd& integral,
                                         double nu_d) {
    if (!(nu_d > 0))
        throw std::domain_error("psi_from_integral: require nu_d > 0");
    Eigen::VectorXd log_psi = -integral / nu_d;
    const double shift = log_psi.maxCoeff();
    return (log_psi.array() - shift).exp();
}

/// Forward Hopf-Cole transform of an initial profile by quadrature.
inline Eigen::VectorXd forward_transform(const std::function<double(double)>& w0,
                                         const GridSpec& grid, double nu_d,
                                         int panels_per_cell = 1) {
    return psi_from_integral(cumulative_integral(w0, grid, panels_per_cell),
                             nu_d);
}

/// Inverse Hopf-Cole transform: w_i = -nu_d (psi_{i+1} - psi_{i-1}) /
/// (2 h psi_i) at interior nodes, w = 0 at the walls (the Neumann condition).
inline Eigen::VectorXd inverse_transform(const Eigen::VectorXd& psi, double h,
                                         double nu_d) {
    const int n = static_cast<int>(psi.size());
    if (n < 3) throw std::domain_error("inverse_transform: need >= 3 nodes");
    for (int i = 0; i < n; ++i)
        if (!(psi(i) > 0.0))
            throw std::domain_error(
                "inverse_transform: psi lost positivity at node " +
                std::to_string(i));
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    for (int i = 1; i < n - 1; ++i)
        w(i) = -nu_d * (psi(i + 1) - psi(i - 1)) / (2.0 * h * psi(i));
    return w;
}

}  // namespace burgers7
