#pragma once

/// Seventh-order weakly L-stable one-step integration formula: Newton-Cotes
/// outer quadrature over quintic Hermite stage values with a sixth-order
/// backward-Taylor replacement, plus the rational stability function Psi(s)
/// derived from it in exact arithmetic.
///
/// Every floating-point coefficient in the solver descends from
/// derive_stability_function(); published variants of these numbers are
/// treated as checksums only, because the printed formulas contain several
/// transcription errors (see cmd_derive_check for the side-by-side audit).

#include "burgers7/rational.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace burgers7 {

/// Closed 7-point Newton-Cotes weights (41,216,27,272,27,216,41)/840 for the
/// integral of f over one step sampled at t_{n+k/6}.
struct NewtonCotesWeights {
    std::array<Rational, 7> weights;

    static NewtonCotesWeights standard() {
        NewtonCotesWeights nc;
        const int raw[7] = {41, 216, 27, 272, 27, 216, 41};
        for (int k = 0; k < 7; ++k) nc.weights[k] = Rational(raw[k], 840);
        return nc;
    }
};

/// Quintic osculatory (Hermite) evaluation stencil at theta = k/6:
///   u(theta*h) ~= c_u0*u_n + c_u1*u_{n+1} + c_du0*h*u'_n + c_du1*h*u'_{n+1}
///              + c_ddu0*h^2*u''_n + c_ddu1*h^2*u''_{n+1}.
struct HermiteStencil {
    Rational theta;
    Rational c_u0, c_u1, c_du0, c_du1, c_ddu0, c_ddu1;

    /// Applies the stencil to u(t) = t^d on a unit step (exact value data).
    Rational apply_monomial(int d) const {
        auto at0 = [d](int order) -> Rational {
            // order-th derivative of t^d at t=0: nonzero only when order == d
            if (order != d) return 0;
            Rational f = 1;
            for (int j = 0; j < order; ++j) f *= d - j;
            return f;
        };
        auto at1 = [d](int order) -> Rational {
            Rational f = 1;
            for (int j = 0; j < order; ++j) f *= d - j;
            return d >= order ? f : 0;
        };
        return c_u0 * at0(0) + c_u1 * at1(0) + c_du0 * at0(1) + c_du1 * at1(1) +
               c_ddu0 * at0(2) + c_ddu1 * at1(2);
    }
};

/// Solves the 6x6 osculatory interpolation system at theta = k/6 in exact
/// rational arithmetic. Throws std::domain_error outside 1 <= k <= 5.
inline HermiteStencil hermite_coefficients(int k) {
    if (k < 1 || k > 5)
        throw std::domain_error("hermite_coefficients: k must be in 1..5");
    const Rational theta(k, 6);

    // Unknown order: (c_u0, c_u1, c_du0, c_du1, c_ddu0, c_ddu1).
    // Row d imposes exactness on u(t) = t^d over a unit step:
    //   c_u0*[d=0] + c_u1 + c_du0*[d=1] + c_du1*d + c_ddu0*2[d=2] + c_ddu1*d(d-1)
    //     = theta^d.
    Rational A[6][7] = {};
    for (int d = 0; d < 6; ++d) {
        A[d][0] = d == 0 ? 1 : 0;
        A[d][1] = 1;
        A[d][2] = d == 1 ? 1 : 0;
        A[d][3] = d;
        A[d][4] = d == 2 ? 2 : 0;
        A[d][5] = d * (d - 1);
        Rational rhs = 1;
        for (int j = 0; j < d; ++j) rhs *= theta;
        A[d][6] = rhs;
    }
    // Gaussian elimination with exact pivoting (any nonzero pivot is exact).
    for (int col = 0; col < 6; ++col) {
        int piv = -1;
        for (int r = col; r < 6; ++r)
            if (A[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("hermite system singular");
        if (piv != col)
            for (int c = 0; c < 7; ++c) std::swap(A[piv][c], A[col][c]);
        for (int r = 0; r < 6; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const Rational m = A[r][col] / A[col][col];
            for (int c = col; c < 7; ++c) A[r][c] -= m * A[col][c];
        }
    }
    HermiteStencil st;
    st.theta = theta;
    Rational* out[6] = {&st.c_u0, &st.c_u1, &st.c_du0,
                        &st.c_du1, &st.c_ddu0, &st.c_ddu1};
    for (int i = 0; i < 6; ++i) *out[i] = A[i][6] / A[i][i];
    return st;
}

/// Fraction of the u_n coefficient replaced by the 6th-order backward Taylor
/// expansion about t_{n+1}; chosen so the stage becomes exact for t^6 as well,
/// which cancels the quintic stencil's h^6 error term. Equals theta^3(1-theta)^3.
inline Rational taylor_replacement_amount(const HermiteStencil& st) {
    // Stencil applied to t^6 data: u(0)=0, u(1)=1, u'(1)=6, u''(1)=30.
    const Rational applied = st.c_u1 + 6 * st.c_du1 + 30 * st.c_ddu1;
    Rational theta6 = 1;
    for (int j = 0; j < 6; ++j) theta6 *= st.theta;
    // Backward Taylor (6 terms) applied to u(t)=t^6 approximates u(0)=0 by
    // sum_{j=0..5} (-1)^j/j! * 6!/(6-j)! = 1-6+15-20+15-6 = -1.
    Rational taylor_t6 = 0, fact = 1;
    for (int j = 0; j <= 5; ++j) {
        if (j > 0) fact *= j;
        Rational deriv = 1;  // 6!/(6-j)!
        for (int i = 0; i < j; ++i) deriv *= 6 - i;
        taylor_t6 += Rational((j % 2) ? -1 : 1) * deriv / fact;
    }
    // Solve applied + r*(taylor_t6 - u(0)) = theta^6 with u(0) = 0.
    return (theta6 - applied) / taylor_t6;
}

/// Rational stability function Psi(s) = num(s)/den(s) for u' = -lambda*u,
/// s = h*lambda; num has degree 3, den degree 6, both scaled to the smallest
/// common integer form (leading constant 453600 = 540 * 840).
struct StabilityFunction {
    RationalPoly num;  // degree 3
    RationalPoly den;  // degree 6

    double eval(double s) const {
        return poly_eval_as(num, s) / poly_eval_as(den, s);
    }
    std::complex<double> eval(std::complex<double> s) const {
        return poly_eval_as(num, s) / poly_eval_as(den, s);
    }
    Rational eval_exact(const Rational& s) const {
        return poly_eval(num, s) / poly_eval(den, s);
    }
};

/// Derives Psi(s) from first principles: substitute u' = -lambda*u (so
/// h*u' = -s*u, h^2*u'' = s^2*u, ...) into the Hermite stages, the backward
/// Taylor replacement, and the Newton-Cotes update, then solve for
/// u_{n+1}/u_n. Single source of truth for all scheme coefficients.
inline StabilityFunction derive_stability_function() {
    const NewtonCotesWeights nc = NewtonCotesWeights::standard();

    // Stage k contributes A_k(s)*u_n + B_k(s)*u_{n+1}:
    //   A_k(s) = (c_u0 - r) - c_du0*s + c_ddu0*s^2
    //   B_k(s) = c_u1 - c_du1*s + c_ddu1*s^2 + r * sum_{j=0..5} s^j/j!
    // where the r-tail is the backward Taylor expansion of u_n about t_{n+1}
    // under the lambda substitution.
    RationalPoly inner_n(3, Rational(0));   // multiplies u_n inside the bracket
    RationalPoly inner_n1(6, Rational(0));  // multiplies u_{n+1}
    for (int k = 1; k <= 5; ++k) {
        const HermiteStencil st = hermite_coefficients(k);
        const Rational r = taylor_replacement_amount(st);
        const Rational w = nc.weights[k] * 840;  // integer 216,27,272,27,216
        inner_n[0] += w * (st.c_u0 - r);
        inner_n[1] += w * -st.c_du0;
        inner_n[2] += w * st.c_ddu0;
        inner_n1[0] += w * st.c_u1;
        inner_n1[1] += w * -st.c_du1;
        inner_n1[2] += w * st.c_ddu1;
        Rational fact = 1;
        for (int j = 0; j <= 5; ++j) {
            if (j > 0) fact *= j;
            inner_n1[j] += w * r / fact;
        }
    }
    // 840*(u_{n+1} - u_n) = -s*[ (41 + inner_n(s))*u_n + (41 + inner_n1(s))*u_{n+1} ]
    RationalPoly num(4, Rational(0)), den(7, Rational(0));
    num[0] = 840;
    den[0] = 840;
    num[1] -= 41;
    den[1] += 41;
    for (int j = 0; j < 3; ++j) num[j + 1] -= inner_n[j];
    for (int j = 0; j < 6; ++j) den[j + 1] += inner_n1[j];

    // Clear denominators: multiplying num and den by the same factor leaves
    // Psi unchanged; 540 turns every coefficient into an integer.
    StabilityFunction f;
    f.num.resize(4);
    f.den.resize(7);
    for (int j = 0; j < 4; ++j) f.num[j] = num[j] * 540;
    for (int j = 0; j < 7; ++j) f.den[j] = den[j] * 540;

    if (f.eval_exact(0) != 1)
        throw std::logic_error("derived stability function: Psi(0) != 1");
    if (f.num.size() - 1 != 3 || f.den.size() - 1 != 6 || f.den[6] == 0)
        throw std::logic_error("derived stability function: degree gap != 3");
    return f;
}

/// Order of the first nonzero Taylor coefficient of Psi(s) - e^{-s}, together
/// with that coefficient; the scheme is (order-1)-th order consistent.
/// For the derived function this is (8, -1/282240).
inline std::pair<int, Rational> consistency_defect(const StabilityFunction& f,
                                                   int max_order = 12) {
    std::vector<Rational> c(max_order + 1);  // Taylor of num/den
    for (int k = 0; k <= max_order; ++k) {
        Rational acc = k < static_cast<int>(f.num.size()) ? f.num[k] : Rational(0);
        for (int j = 1; j <= k; ++j) {
            const Rational dj =
                j < static_cast<int>(f.den.size()) ? f.den[j] : Rational(0);
            acc -= dj * c[k - j];
        }
        c[k] = acc / f.den[0];
    }
    Rational fact = 1;
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) fact *= k;
        const Rational expk = Rational((k % 2) ? -1 : 1) / fact;
        if (c[k] != expk) return {k, c[k] - expk};
    }
    return {max_order + 1, Rational(0)};
}

/// Stable Horner evaluation of Psi at real s >= 0 (denominator positive there).
inline double psi_eval(const StabilityFunction& f, double s) { return f.eval(s); }

/// One step of the scheme on u' = -lambda*u: returns Psi(h*lambda)*u.
inline double scalar_step(const StabilityFunction& f, double u, double lambda,
                          double h) {
    return f.eval(h * lambda) * u;
}

struct LocusPoint {
    std::complex<double> s;
    double residual;  // | |Psi(s)| - 1 |
};

/// All complex roots of num(s) - e^{i*theta} * den(s) = 0 for one angle,
/// computed by companion-matrix eigenvalues and polished by Newton's method.
/// The union over theta in [0, 2*pi) traces the |Psi| = 1 boundary locus.
inline std::vector<LocusPoint> stability_boundary_points(
    const StabilityFunction& f, double theta) {
    using Cplx = std::complex<double>;
    const Cplx phase = std::polar(1.0, theta);
    std::array<Cplx, 7> coeff{};  // p(s) = sum coeff[j] s^j, degree 6
    for (int j = 0; j < 7; ++j) {
        const double nj = j < 4 ? static_cast<double>(f.num[j]) : 0.0;
        coeff[j] = Cplx(nj) - phase * static_cast<double>(f.den[j]);
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(6, 6);
    for (int j = 0; j < 6; ++j) companion(j, 5) = -coeff[j] / coeff[6];
    for (int j = 1; j < 6; ++j) companion(j, j - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("stability_boundary_points: eigensolver failed");

    auto p = [&](Cplx s) {
        Cplx acc = 0;
        for (int j = 6; j >= 0; --j) acc = acc * s + coeff[j];
        return acc;
    };
    auto dp = [&](Cplx s) {
        Cplx acc = 0;
        for (int j = 6; j >= 1; --j) acc = acc * s + double(j) * coeff[j];
        return acc;
    };
    std::vector<LocusPoint> out;
    for (int i = 0; i < 6; ++i) {
        Cplx s = es.eigenvalues()(i);
        for (int it = 0; it < 4; ++it) {
            const Cplx d = dp(s);
            if (std::abs(d) == 0.0) break;
            s -= p(s) / d;
        }
        out.push_back({s, std::abs(std::abs(f.eval(s)) - 1.0)});
    }
    return out;
}

/// Trajectory of the locus over a sample list of angles.
inline std::vector<std::vector<LocusPoint>> stability_boundary(
    const StabilityFunction& f, const std::vector<double>& theta_samples) {
    if (theta_samples.empty())
        throw std::domain_error("stability_boundary: empty sample list");
    std::vector<std::vector<LocusPoint>> all;
    all.reserve(theta_samples.size());
    for (double th : theta_samples) all.push_back(stability_boundary_points(f, th));
    return all;
}

struct OdeConvergence {
    std::vector<double> h;       // step sizes, halving
    std::vector<double> error;   // |Psi(h)^(T/h) - e^{-T}| at T = 1, lambda = 1
    std::vector<double> orders;  // successive log2 ratios
};

/// Grid-refinement study on u' = -u to T = 1 with h = 2^-3 .. 2^-7.
///
/// The global errors range from ~6e-13 down to ~2e-21 -- the finer levels sit
/// far below double-precision resolution, so the powers are accumulated in
/// 50-digit arithmetic; the production stepper is unaffected.
inline OdeConvergence ode_convergence_study(const StabilityFunction& f,
                                            int k_min = 3, int k_max = 7) {
    OdeConvergence res;
    const BigFloat exact = exp(BigFloat(-1));
    std::vector<BigFloat> errs;
    for (int k = k_min; k <= k_max; ++k) {
        const BigFloat h = pow(BigFloat(2), -k);
        const BigFloat amp = poly_eval_as(f.num, h) / poly_eval_as(f.den, h);
        BigFloat u = 1;
        const long steps = 1L << k;
        for (long i = 0; i < steps; ++i) u *= amp;
        errs.push_back(abs(u - exact));
        res.h.push_back(static_cast<double>(h));
        res.error.push_back(static_cast<double>(errs.back()));
    }
    for (std::size_t i = 0; i + 1 < errs.size(); ++i)
        res.orders.push_back(
            static_cast<double>(log(errs[i] / errs[i + 1]) / log(BigFloat(2))));
    return res;
}

}  // namespace burgers7
