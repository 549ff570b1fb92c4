#pragma once

/// Registry of the six benchmark problems: domain, initial profile, default
/// viscosity/step parameters from the published tables, and which reference
/// solution applies. The initial profiles take nu_d as a parameter because
/// the shock profile depends on it.

#include <functional>
#include <string>
#include <vector>

namespace burgers7 {

enum class ProblemId { ex1, ex2, ex3, ex4, ex5, ex6 };

enum class ExactKind { fourier, shock, two_mode, none };

/// One published parameter tuple, traceable to its table.
struct TableParams {
    int table_id = 0;
    double nu_d = 0.0;
    double h = 0.0;
    double tau = 0.0;
    std::vector<double> report_times;
    std::string citation;  ///< e.g. "table 1 (nu_d=2, h=0.0125, tau=0.0001)"
};

struct Problem {
    ProblemId id;
    std::string name;  ///< CLI identifier: ex1..ex6
    double a0 = 0.0;
    double a1 = 1.0;
    double t_init = 0.0;
    bool left_consistent = true;   ///< w0(a0) == 0
    bool right_consistent = true;  ///< w0(a1) == 0
    ExactKind exact = ExactKind::none;
    /// Initial profile w0(x; nu_d).
    std::function<double(double, double)> w0;
    /// Closed-form antiderivative I(x) = int_{a0}^x w0, when one exists
    /// (feeds the Fourier reference); empty otherwise.
    std::function<double(double, double)> w0_integral;
    std::vector<TableParams> default_params;
};

const Problem& get_problem(ProblemId id);
const Problem& get_problem(const std::string& name);
ProblemId problem_from_name(const std::string& name);
const std::vector<Problem>& all_problems();

}  // namespace burgers7
