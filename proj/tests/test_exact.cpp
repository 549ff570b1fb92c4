#include <doctest.h>

#include "burgers7/exact.hpp"

#include <cmath>
#include <numbers>

using namespace burgers7;

namespace {

constexpr double kPi = std::numbers::pi;

/// Transformed sine profile exp(-I/nu_d), I = (1 - cos(pi x))/pi.
std::function<double(double)> sine_psi0(double nu_d) {
    return [nu_d](double x) {
        return std::exp(-(1.0 - std::cos(kPi * x)) / (kPi * nu_d));
    };
}

}  // namespace

TEST_CASE("constructor validates parameters") {
    CHECK_THROWS_AS(FourierSolution(sine_psi0(2.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(FourierSolution(sine_psi0(2.0), -1.0), std::domain_error);
    CHECK_THROWS_AS(FourierSolution(sine_psi0(2.0), 2.0, 4), std::domain_error);
    const FourierSolution f(sine_psi0(2.0), 2.0);
    CHECK(f.max_terms() == 10000);
    CHECK_THROWS_AS(f.evaluate(-0.5, 0.1), std::domain_error);
    CHECK_THROWS_AS(f.evaluate(1.5, 0.1), std::domain_error);
}

TEST_CASE("constant psi0 has beta_0 = 1 and no oscillatory content") {
    const FourierSolution f([](double) { return 1.0; }, 2.0);
    CHECK(f.coefficient(0) == doctest::Approx(1.0).epsilon(1e-13));
    for (int l = 1; l <= 6; ++l)
        CHECK(std::abs(f.coefficient(l)) <= 1e-12);
    const ExactValue v = f.evaluate(0.37, 0.25);
    CHECK(v.reliable);
    CHECK(std::abs(v.w) <= 1e-12);
}

TEST_CASE("adaptive coefficients agree with a dense trapezoid cross-check") {
    // Independent quadrature: 2^16-panel trapezoid sums of the same
    // integrands.
    const double nu_d = 2.0;
    const auto psi0 = sine_psi0(nu_d);
    const FourierSolution f(psi0, nu_d);
    const int panels = 1 << 16;
    for (int l : {0, 1, 3, 7}) {
        double acc = 0.5 * (psi0(0.0) * 1.0 +
                            psi0(1.0) * std::cos(l * kPi));
        for (int i = 1; i < panels; ++i) {
            const double x = static_cast<double>(i) / panels;
            acc += psi0(x) * std::cos(l * kPi * x);
        }
        acc /= panels;
        const double want = l == 0 ? acc : 2.0 * acc;
        CHECK(f.coefficient(l) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("coefficients are bounded by 2 beta_0 for positive psi0") {
    const FourierSolution f(sine_psi0(0.2), 0.2);
    const double beta0 = f.coefficient(0);
    CHECK(beta0 > 0.0);
    for (int l = 1; l <= 10; ++l)
        CHECK(std::abs(f.coefficient(l)) <= 2.0 * beta0 + 1e-15);
}

TEST_CASE("series at t = 0 recovers the sine profile") {
    // The sine profile's coefficients decay like a Bessel tail, so the
    // series is effectively exact after ~10 terms even at t = 0.
    const double nu_d = 2.0;
    const FourierSolution f(sine_psi0(nu_d), nu_d);
    for (double x : {0.1, 0.25, 0.5, 0.8}) {
        const ExactValue v = f.evaluate(x, 0.0);
        CHECK(v.reliable);
        CHECK(v.w == doctest::Approx(std::sin(kPi * x)).epsilon(1e-10));
    }
}

TEST_CASE("series vanishes at both walls") {
    const FourierSolution f(sine_psi0(2.0), 2.0);
    CHECK(f.evaluate(0.0, 0.2).w == 0.0);
    CHECK(std::abs(f.evaluate(1.0, 0.2).w) <= 1e-12);
}

TEST_CASE("series needs few terms in the strongly diffusive regime") {
    const FourierSolution f(sine_psi0(2.0), 2.0);
    const ExactValue v = f.evaluate(0.5, 0.1);
    CHECK(v.reliable);
    CHECK(v.terms_used <= 30);
}

TEST_CASE("series matches the published reference value at nu_d = 0.2") {
    // table 2 (nu_d=0.2, h=0.0125, tau=0.0001): exact column lists 0.29192
    // at x = 0.5, T = 1.
    const FourierSolution f(sine_psi0(0.2), 0.2);
    const ExactValue v = f.evaluate(0.5, 1.0);
    CHECK(v.reliable);
    CHECK(std::abs(v.w - 0.29192) <= 1e-5);
}

TEST_CASE("evaluator reports unreliability at tiny viscosity instead of lying") {
    // nu_d = 0.001 at T = 10: the surviving modes nearly cancel the
    // denominator's beta_0, so no trustworthy value exists at this precision.
    const double nu_d = 0.001;
    const FourierSolution f(sine_psi0(nu_d), nu_d);
    bool any_unreliable = false;
    for (double x : {0.3, 0.5, 0.7}) {
        const ExactValue v = f.evaluate(x, 10.0);
        any_unreliable = any_unreliable || !v.reliable;
    }
    CHECK(any_unreliable);
}

TEST_CASE("grid evaluation aggregates per-node reliability") {
    const FourierSolution f(sine_psi0(2.0), 2.0);
    const auto eval = f.evaluate_many({0.0, 0.25, 0.5, 0.75, 1.0}, 0.1);
    CHECK(eval.reliable);
    CHECK(eval.w.size() == 5);
    CHECK(eval.w(0) == 0.0);
    CHECK(eval.w(2) == doctest::Approx(f.evaluate(0.5, 0.1).w));
}

TEST_CASE("shock closed form hits the published spot values") {
    // table 7 (nu_d=0.002, h=0.0005, tau=0.01) exact column.
    CHECK(std::abs(shock_exact(0.2, 3.0, 0.002) - 0.066667) <= 1e-6);
    CHECK(std::abs(shock_exact(0.6, 1.7, 0.002) - 0.352909) <= 1e-6);
    CHECK(std::abs(shock_exact(1.0, 3.5, 0.002) - 0.000020) <= 3e-7);
    // Full-precision regression pins for the same three spots.
    CHECK(shock_exact(0.2, 3.0, 0.002) ==
          doctest::Approx(0.06666666666666667).epsilon(1e-14));
    CHECK(shock_exact(0.6, 1.7, 0.002) ==
          doctest::Approx(0.35290870196740737).epsilon(1e-14));
    CHECK(shock_exact(1.0, 3.5, 0.002) ==
          doctest::Approx(2.0241274861788855e-05).epsilon(1e-14));
}

TEST_CASE("shock closed form survives the overflow regime") {
    // Exponent far above 700: the guarded branch underflows cleanly to 0
    // instead of dividing by infinity.
    const double w = shock_exact(1.2, 1.0, 0.0005);
    CHECK(std::isfinite(w));
    CHECK(w >= 0.0);
    CHECK(w <= 1e-300);
    // Just under the switch the two branches must agree.
    const double lo = shock_exact(1.0, 1.7, 0.002);
    CHECK(std::isfinite(lo));
    CHECK(lo == doctest::Approx(8.528961674442367e-38).epsilon(1e-12));
    CHECK_THROWS_AS(shock_exact(0.5, 0.0, 0.002), std::domain_error);
    CHECK_THROWS_AS(shock_exact(0.5, 1.0, 0.0), std::domain_error);
}

TEST_CASE("two-mode closed form: boundary zeros and the t = 0 midpoint") {
    CHECK(two_mode_exact(0.0, 0.5, 0.001) == 0.0);
    CHECK(std::abs(two_mode_exact(2.0, 0.5, 0.001)) <= 1e-17);
    // At x = 1/2, t = 0: numerator sin(pi/2) = 1, denominator 4 + 0 - 2 = 2.
    CHECK(two_mode_exact(0.5, 0.0, 0.001) ==
          doctest::Approx(0.0015707963267948967).epsilon(1e-14));
    // Long-time decay toward rest.
    CHECK(std::abs(two_mode_exact(0.7, 1e6, 0.1)) < 1e-8);
}
