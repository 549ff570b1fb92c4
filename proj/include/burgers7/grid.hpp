#pragma once

/// Uniform space-time grid description shared by the solvers, the table
/// drivers, and the CLI.

#include <cmath>
#include <stdexcept>
#include <string>

namespace burgers7 {

/// Uniform grid on [a0, a1] x [t0, T]: N space cells (N+1 nodes including
/// both boundaries) and M time steps of size tau.
struct GridSpec {
    double a0 = 0.0;
    double a1 = 1.0;
    int N = 8;        ///< number of space cells; nodes are x_i = a0 + i*h
    double h = 0.125; ///< cell width, h = (a1 - a0)/N
    double t0 = 0.0;
    double T = 1.0;
    int M = 1;        ///< number of time steps
    double tau = 1.0; ///< step size, tau = (T - t0)/M

    static GridSpec make(double a0, double a1, int N, double t0, double T,
                         int M) {
        if (!(a1 > a0)) throw std::domain_error("GridSpec: require a1 > a0");
        if (N < 4) throw std::domain_error("GridSpec: require N >= 4");
        if (!(T >= t0)) throw std::domain_error("GridSpec: require T >= t0");
        if (M < 1) throw std::domain_error("GridSpec: require M >= 1");
        GridSpec g;
        g.a0 = a0;
        g.a1 = a1;
        g.N = N;
        g.h = (a1 - a0) / N;
        g.t0 = t0;
        g.T = T;
        g.M = M;
        g.tau = (T - t0) / M;
        return g;
    }

    /// Builds the spec from target spacings; h and tau must divide their
    /// intervals to within a relative 1e-12 or the call refuses.
    static GridSpec from_spacings(double a0, double a1, double h, double t0,
                                  double T, double tau) {
        if (!(h > 0)) throw std::domain_error("GridSpec: require h > 0");
        if (!(tau > 0)) throw std::domain_error("GridSpec: require tau > 0");
        const double n_real = (a1 - a0) / h;
        const int n = static_cast<int>(std::llround(n_real));
        if (n < 1 || std::abs(n_real - n) > 1e-12 * std::max(1.0, n_real))
            throw std::domain_error(
                "GridSpec: h does not evenly divide [a0, a1]");
        const double m_real = (T - t0) / tau;
        const int m = static_cast<int>(std::llround(m_real));
        if (m < 1 || std::abs(m_real - m) > 1e-12 * std::max(1.0, m_real))
            throw std::domain_error(
                "GridSpec: tau does not evenly divide [t0, T]");
        return make(a0, a1, n, t0, T, m);
    }

    double x(int i) const { return a0 + i * h; }
    double t(int j) const { return t0 + j * tau; }
    int nodes() const { return N + 1; }
};

}  // namespace burgers7
