#pragma once

/// Reference solutions: the Fourier-series solution obtained by solving the
/// transformed heat problem mode by mode, plus closed forms for the
/// shock-wave and two-mode benchmark profiles. The Fourier evaluator reports
/// whether its value is trustworthy; it refuses silently wrong answers when
/// the series tail has not converged or the denominator is produced by
/// catastrophic cancellation (both occur for small nu_d at late times).

#include "burgers7/hopf_cole.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace burgers7 {

/// A reference value together with its trust flag.
struct ExactValue {
    double w = 0.0;
    bool reliable = true;
    int terms_used = 0;  ///< series terms summed (0 for closed forms)
};

/// Series solution on [0, 1]:
///   w(x,t) = pi nu_d sum_l beta_l d_l(t) l sin(l pi x)
///            / (beta_0 + sum_l beta_l d_l(t) cos(l pi x)),
/// with d_l(t) = exp(-nu_d l^2 pi^2 t / 2), beta_0 = int psi0,
/// beta_l = 2 int psi0 cos(l pi x) dx. Coefficients are integrated on demand
/// and cached.
class FourierSolution {
  public:
    /// psi0 is the transformed initial profile exp(-I(x)/nu_d) on [0, 1].
    FourierSolution(std::function<double(double)> psi0, double nu_d,
                    int l_max = 10000)
        : psi0_(std::move(psi0)), nu_d_(nu_d), l_max_(l_max) {
        if (!(nu_d > 0))
            throw std::domain_error("FourierSolution: require nu_d > 0");
        if (l_max < 8)
            throw std::domain_error("FourierSolution: require l_max >= 8");
    }

    /// beta_0, or the full coefficient 2*integral for l >= 1.
    double coefficient(int l) const {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure_coefficients(l);
        return beta_[static_cast<std::size_t>(l)];
    }

    int max_terms() const { return l_max_; }

    ExactValue evaluate(double x, double t) const {
        std::lock_guard<std::mutex> lock(mutex_);
        return evaluate_locked(x, t);
    }

    struct GridEval {
        Eigen::VectorXd w;
        bool reliable = true;  ///< true only if every node was reliable
    };

    GridEval evaluate_many(const std::vector<double>& xs, double t) const {
        std::lock_guard<std::mutex> lock(mutex_);
        GridEval out;
        out.w.resize(static_cast<Eigen::Index>(xs.size()));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const ExactValue v = evaluate_locked(xs[i], t);
            out.w(static_cast<Eigen::Index>(i)) = v.w;
            out.reliable = out.reliable && v.reliable;
        }
        return out;
    }

  private:
    ExactValue evaluate_locked(double x, double t) const {
        if (t < 0) throw std::domain_error("FourierSolution: require t >= 0");
        if (x < -1e-12 || x > 1.0 + 1e-12)
            throw std::domain_error("FourierSolution: require x in [0, 1]");
        ensure_coefficients(1);
        const double beta0 = beta_[0];
        const double pi = std::numbers::pi;
        double num = 0.0;
        double den = beta0;
        double den_magnitude = std::abs(beta0);
        bool tail_converged = false;
        int terms = 0;
        for (int l = 1; l <= l_max_; ++l) {
            ensure_coefficients(l);
            const double damping = std::exp(-nu_d_ * l * l * pi * pi * t / 2.0);
            const double term = beta_[static_cast<std::size_t>(l)] * damping;
            num += term * l * std::sin(l * pi * x);
            den += term * std::cos(l * pi * x);
            den_magnitude += std::abs(term);
            terms = l;
            if (std::abs(term) * l < term_tol_ * std::abs(beta0)) {
                tail_converged = true;
                break;
            }
        }
        if (std::abs(den) < 1e-300)
            throw std::runtime_error(
                "FourierSolution: series denominator vanished");
        ExactValue v;
        v.terms_used = terms;
        v.w = pi * nu_d_ * num / den;
        // Unreliable if the tail was truncated short of its bound, or if the
        // denominator is tiny relative to the terms that formed it (the
        // cancellation leaves no correct digits in double precision).
        v.reliable = tail_converged && std::abs(den) >= 1e-6 * den_magnitude;
        return v;
    }

    /// Integrates psi0(x) cos(l pi x) adaptively: composite Gauss-Legendre
    /// with at least four panels per oscillation, doubled until two
    /// refinements agree to 1e-12 relative to beta_0.
    double integrate_mode(int l) const {
        static const GaussLegendre5 rule;
        const double pi = std::numbers::pi;
        auto f = [&](double x) { return psi0_(x) * std::cos(l * pi * x); };
        auto composite = [&](int panels) {
            double acc = 0.0;
            for (int p = 0; p < panels; ++p)
                acc += rule.integrate(f, static_cast<double>(p) / panels,
                                      static_cast<double>(p + 1) / panels);
            return acc;
        };
        int panels = std::max(8, 4 * std::max(l, 1));
        double coarse = composite(panels);
        for (int pass = 0; pass < 14; ++pass) {
            panels *= 2;
            const double fine = composite(panels);
            const double scale =
                beta_.empty() ? std::max(1e-300, std::abs(fine))
                              : std::max(1e-300, std::abs(beta_[0]));
            if (std::abs(fine - coarse) <= 1e-12 * scale) return fine;
            coarse = fine;
        }
        return coarse;
    }

    void ensure_coefficients(int l) const {
        while (static_cast<int>(beta_.size()) <= l) {
            const int next = static_cast<int>(beta_.size());
            const double integral = integrate_mode(next);
            beta_.push_back(next == 0 ? integral : 2.0 * integral);
        }
    }

    std::function<double(double)> psi0_;
    double nu_d_;
    int l_max_;
    double term_tol_ = 1e-15;  ///< tail cut relative to beta_0
    mutable std::vector<double> beta_;
    mutable std::mutex mutex_;
};

/// Shock-wave solution on (0, 1.2) for t >= 1:
///   w = (x/t) / (1 + sqrt(t/t0) e^q), q = x^2/(2 nu_d t), t0 = e^{1/(4 nu_d)},
/// evaluated through the combined exponent to survive the huge intermediate
/// magnitudes at small nu_d.
inline double shock_exact(double x, double t, double nu_d) {
    if (!(nu_d > 0)) throw std::domain_error("shock_exact: require nu_d > 0");
    if (!(t > 0)) throw std::domain_error("shock_exact: require t > 0");
    const double exponent =
        0.5 * std::log(t) - 1.0 / (8.0 * nu_d) + x * x / (2.0 * nu_d * t);
    if (exponent >= 700.0) return (x / t) * std::exp(-exponent);
    return (x / t) / (1.0 + std::exp(exponent));
}

/// Two-mode analytic solution on (0, 2) as published:
///   w = pi nu_d [sin(pi x) e1 + 4 sin(2 pi x) e2]
///       / [4 + cos(pi x) e1 + 2 cos(2 pi x) e2],
/// with e1 = exp(-pi^2 nu_d^2 t / 4) and e2 = exp(-pi^2 nu_d^2 t). The
/// damping exponents carry nu_d squared; at nu_d = 2 they coincide with the
/// heat-semigroup rates of the transformed problem.
inline double two_mode_exact(double x, double t, double nu_d) {
    const double pi = std::numbers::pi;
    const double e1 = std::exp(-pi * pi * nu_d * nu_d * t / 4.0);
    const double e2 = std::exp(-pi * pi * nu_d * nu_d * t);
    const double num = std::sin(pi * x) * e1 + 4.0 * std::sin(2.0 * pi * x) * e2;
    const double den = 4.0 + std::cos(pi * x) * e1 + 2.0 * std::cos(2.0 * pi * x) * e2;
    return pi * nu_d * num / den;
}

}  // namespace burgers7
