#pragma once

/// Fourth-order pentadiagonal discretization of -d^2/dx^2 with homogeneous
/// Neumann boundaries, scaled so that the interior stencil is
/// (1, -16, 30, -16, 1); the continuous operator is approximated by
/// D/(12 h^2). Boundary rows one-sidedly fold the ghost values implied by the
/// even reflection, which keeps the matrix pentadiagonal and preserves the
/// discrete conservation identity w^T D = 0 for trapezoid weights w.

#include "burgers7/banded.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace burgers7 {

/// Assembles the (N+1) x (N+1) pentadiagonal Neumann operator D.
template <typename Scalar = double>
BandedMatrix<Scalar> assemble_neumann_operator(int N) {
    if (N < 4)
        throw std::domain_error("assemble_neumann_operator: require N >= 4");
    const int n = N + 1;
    BandedMatrix<Scalar> d(n, 2, 2);
    auto set_row = [&](int i, int j0, std::initializer_list<double> vals) {
        int j = j0;
        for (double v : vals) d.set(i, j++, Scalar(v));
    };
    set_row(0, 0, {30.0, -32.0, 2.0});
    set_row(1, 0, {-16.0, 31.0, -16.0, 1.0});
    for (int i = 2; i <= N - 2; ++i)
        set_row(i, i - 2, {1.0, -16.0, 30.0, -16.0, 1.0});
    set_row(N - 1, N - 3, {1.0, -16.0, 31.0, -16.0});
    set_row(N, N - 2, {2.0, -32.0, 30.0});
    return d;
}

/// Exact eigenvalues of D: lambda_l = 30 + 2 cos(2 l pi / N) - 32 cos(l pi / N)
/// for l = 0..N, a consequence of cosine modes diagonalizing the reflected
/// stencil. All lie in [0, 64].
inline Eigen::VectorXd neumann_operator_eigenvalues(int N) {
    if (N < 4)
        throw std::domain_error(
            "neumann_operator_eigenvalues: require N >= 4");
    Eigen::VectorXd lam(N + 1);
    for (int l = 0; l <= N; ++l) {
        const double a = l * std::numbers::pi / N;
        lam(l) = 30.0 + 2.0 * std::cos(2.0 * a) - 32.0 * std::cos(a);
    }
    return lam;
}

/// Cosine eigenvector for mode l: v_i = cos(l pi i / N).
inline Eigen::VectorXd neumann_operator_eigenvector(int N, int l) {
    Eigen::VectorXd v(N + 1);
    for (int i = 0; i <= N; ++i)
        v(i) = std::cos(l * std::numbers::pi * i / N);
    return v;
}

/// Trapezoid quadrature weights on the N+1 nodes (h/2, h, ..., h, h/2);
/// the left null vector of D up to scaling.
inline Eigen::VectorXd trapezoid_weights(int N, double h) {
    Eigen::VectorXd w = Eigen::VectorXd::Constant(N + 1, h);
    w(0) = 0.5 * h;
    w(N) = 0.5 * h;
    return w;
}

}  // namespace burgers7
