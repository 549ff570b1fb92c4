#include "burgers7/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace burgers7 {
namespace {

constexpr double kPi = std::numbers::pi;

double ex1_w0(double x, double) { return std::sin(kPi * x); }
double ex1_integral(double x, double) { return (1.0 - std::cos(kPi * x)) / kPi; }

double ex2_w0(double x, double) { return 4.0 * x * (1.0 - x); }
double ex2_integral(double x, double) {
    return 2.0 * x * x - (4.0 / 3.0) * x * x * x;
}

// Shock profile at t = 1; the exponent overflows naively for small nu_d.
double ex3_w0(double x, double nu_d) {
    const double q = (x * x - 0.25) / (2.0 * nu_d);
    if (q >= 700.0) return x * std::exp(-q);
    return x / (1.0 + std::exp(q));
}

double ex4_w0(double x, double nu_d) {
    const double num = std::sin(kPi * x) + 4.0 * std::sin(2.0 * kPi * x);
    const double den =
        4.0 + std::cos(kPi * x) + 2.0 * std::cos(2.0 * kPi * x);
    return kPi * nu_d * num / den;
}

double ex5_w0(double x, double) { return std::sin(kPi * x / 2.0); }
double ex5_integral(double x, double) {
    return (2.0 / kPi) * (1.0 - std::cos(kPi * x / 2.0));
}

double ex6_w0(double x, double) { return std::cos(kPi * x / 4.0); }
double ex6_integral(double x, double) {
    return (4.0 / kPi) * std::sin(kPi * x / 4.0);
}

std::vector<Problem> build_registry() {
    std::vector<Problem> reg;

    Problem ex1;
    ex1.id = ProblemId::ex1;
    ex1.name = "ex1";
    ex1.exact = ExactKind::fourier;
    ex1.w0 = ex1_w0;
    ex1.w0_integral = ex1_integral;
    ex1.default_params = {
        {1, 2.0, 0.0125, 0.0001, {0.001, 0.01, 0.1},
         "table 1 (nu_d=2, h=0.0125, tau=0.0001)"},
        {2, 0.2, 0.0125, 0.0001, {0.4, 0.6, 0.8, 1.0, 3.0},
         "table 2 (nu_d=0.2, h=0.0125, tau=0.0001)"},
        {3, 0.01, 0.0125, 0.01, {5.0, 10.0, 15.0, 20.0},
         "table 3 (nu_d=0.01, h=0.0125, tau=0.01)"},
    };
    reg.push_back(ex1);

    Problem ex2;
    ex2.id = ProblemId::ex2;
    ex2.name = "ex2";
    ex2.exact = ExactKind::fourier;
    ex2.w0 = ex2_w0;
    ex2.w0_integral = ex2_integral;
    ex2.default_params = {
        {4, 2.0, 0.0125, 0.0001, {0.001, 0.01, 0.1},
         "table 4 (nu_d=2, h=0.0125, tau=0.0001)"},
        {5, 0.2, 0.0125, 0.0001, {0.4, 0.6, 0.8, 1.0, 3.0},
         "table 5 (nu_d=0.2, h=0.0125, tau=0.0001)"},
        {6, 0.01, 0.0125, 0.01, {5.0, 10.0, 15.0, 20.0},
         "table 6 (nu_d=0.01, h=0.0125, tau=0.01)"},
    };
    reg.push_back(ex2);

    Problem ex3;
    ex3.id = ProblemId::ex3;
    ex3.name = "ex3";
    ex3.a1 = 1.2;
    ex3.t_init = 1.0;
    ex3.exact = ExactKind::shock;
    ex3.w0 = ex3_w0;
    ex3.default_params = {
        {7, 0.002, 0.0005, 0.01, {1.7, 3.0, 3.5},
         "table 7 (nu_d=0.002, h=0.0005, tau=0.01)"},
    };
    reg.push_back(ex3);

    Problem ex4;
    ex4.id = ProblemId::ex4;
    ex4.name = "ex4";
    ex4.a1 = 2.0;
    ex4.exact = ExactKind::two_mode;
    ex4.w0 = ex4_w0;
    reg.push_back(ex4);

    Problem ex5;
    ex5.id = ProblemId::ex5;
    ex5.name = "ex5";
    ex5.right_consistent = false;  // w0(1) = sin(pi/2) = 1
    ex5.exact = ExactKind::fourier;
    ex5.w0 = ex5_w0;
    ex5.w0_integral = ex5_integral;
    reg.push_back(ex5);

    Problem ex6;
    ex6.id = ProblemId::ex6;
    ex6.name = "ex6";
    ex6.left_consistent = false;   // w0(0) = 1
    ex6.right_consistent = false;  // w0(1) = cos(pi/4)
    ex6.exact = ExactKind::fourier;
    ex6.w0 = ex6_w0;
    ex6.w0_integral = ex6_integral;
    reg.push_back(ex6);

    return reg;
}

}  // namespace

const std::vector<Problem>& all_problems() {
    static const std::vector<Problem> registry = build_registry();
    return registry;
}

const Problem& get_problem(ProblemId id) {
    for (const Problem& p : all_problems())
        if (p.id == id) return p;
    throw std::domain_error("get_problem: unknown problem id");
}

ProblemId problem_from_name(const std::string& name) {
    for (const Problem& p : all_problems())
        if (p.name == name) return p.id;
    throw std::domain_error("unknown problem '" + name +
                            "' (expected ex1..ex6)");
}

const Problem& get_problem(const std::string& name) {
    return get_problem(problem_from_name(name));
}

}  // namespace burgers7
