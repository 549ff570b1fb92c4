#pragma once

/// Time integration of the semi-discrete heat system psi' = -(nu_d/(24 h^2))
/// D psi. One step applies a rational function of rho*D, where
/// rho = nu_d * tau / (24 h^2): the seventh-order scheme uses the derived
/// degree-3/degree-6 stability function, Crank-Nicolson the familiar
/// (1 - s/2)/(1 + s/2). The implicit operator is factored once per run.

#include "burgers7/banded.hpp"
#include "burgers7/grid.hpp"
#include "burgers7/scheme.hpp"
#include "burgers7/spatial.hpp"

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burgers7 {

enum class Scheme { hoc7, cn };

inline const char* scheme_name(Scheme s) {
    return s == Scheme::hoc7 ? "hoc7" : "cn";
}

inline Scheme scheme_from_name(const std::string& name) {
    if (name == "hoc7") return Scheme::hoc7;
    if (name == "cn") return Scheme::cn;
    throw std::domain_error("unknown scheme '" + name +
                            "' (expected hoc7 or cn)");
}

/// Marches psi forward in steps of tau by solving
/// den(rho D) psi_{j+1} = num(rho D) psi_j with banded LU.
class HeatPropagator {
  public:
    HeatPropagator(const GridSpec& grid, double nu_d, Scheme scheme,
                   const StabilityFunction& f = derive_stability_function())
        : scheme_(scheme),
          rho_(nu_d * grid.tau / (24.0 * grid.h * grid.h)),
          stability_(f) {
        if (!(nu_d > 0))
            throw std::domain_error("HeatPropagator: require nu_d > 0");
        const BandedMatrix<double> d = assemble_neumann_operator(grid.N);
        std::vector<double> num_c, den_c;
        if (scheme_ == Scheme::hoc7) {
            // Normalize by den[0] so both operators have O(1) entries.
            const double scale = static_cast<double>(f.den[0]);
            for (const Rational& c : f.num)
                num_c.push_back(static_cast<double>(c) / scale);
            for (const Rational& c : f.den)
                den_c.push_back(static_cast<double>(c) / scale);
        } else {
            num_c = {1.0, -0.5};
            den_c = {1.0, 0.5};
        }
        explicit_op_ = band_polynomial(d, rho_, num_c);
        BandedMatrix<double> implicit_op = band_polynomial(d, rho_, den_c);
        lu_.emplace(implicit_op);
    }

    double rho() const { return rho_; }
    Scheme scheme() const { return scheme_; }

    /// Scalar amplification factor applied to a D-eigenmode with eigenvalue
    /// lambda; the matrix step is exactly this factor mode by mode.
    double amplification(double lambda) const {
        const double s = rho_ * lambda;
        if (scheme_ == Scheme::hoc7) return stability_.eval(s);
        return (1.0 - 0.5 * s) / (1.0 + 0.5 * s);
    }

    /// Advances one time step.
    Eigen::VectorXd step(const Eigen::VectorXd& psi) const {
        return lu_->solve(explicit_op_.multiply(psi));
    }

    /// Advances `steps` steps, invoking observer(j, psi) after step j
    /// (j = 1..steps).
    template <typename Observer>
    Eigen::VectorXd advance(Eigen::VectorXd psi, int steps,
                            Observer&& observer) const {
        for (int j = 1; j <= steps; ++j) {
            psi = step(psi);
            observer(j, psi);
        }
        return psi;
    }

    Eigen::VectorXd advance(Eigen::VectorXd psi, int steps) const {
        return advance(std::move(psi), steps, [](int, const Eigen::VectorXd&) {});
    }

  private:
    Scheme scheme_;
    double rho_;
    StabilityFunction stability_;
    BandedMatrix<double> explicit_op_;
    std::optional<BandedLU<double>> lu_;
};

}  // namespace burgers7
