#include <doctest.h>

#include "burgers7/exact.hpp"
#include "burgers7/problems.hpp"
#include "burgers7/tables.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace burgers7;

TEST_CASE("registry holds the six benchmark problems under their CLI names") {
    const auto& all = all_problems();
    REQUIRE(all.size() == 6);
    for (int k = 0; k < 6; ++k) {
        const std::string name = "ex" + std::to_string(k + 1);
        CHECK(all[k].name == name);
        CHECK(&get_problem(name) == &all[k]);
        CHECK(&get_problem(all[k].id) == &all[k]);
        CHECK(problem_from_name(name) == all[k].id);
    }
    CHECK_THROWS_AS(get_problem("ex7"), std::domain_error);
    CHECK_THROWS_AS(problem_from_name(""), std::domain_error);
}

TEST_CASE("domains, start times, and reference kinds are as published") {
    CHECK(get_problem("ex1").a1 == 1.0);
    CHECK(get_problem("ex1").exact == ExactKind::fourier);
    CHECK(get_problem("ex2").exact == ExactKind::fourier);
    CHECK(get_problem("ex3").a1 == 1.2);
    CHECK(get_problem("ex3").t_init == 1.0);
    CHECK(get_problem("ex3").exact == ExactKind::shock);
    CHECK(get_problem("ex4").a1 == 2.0);
    CHECK(get_problem("ex4").exact == ExactKind::two_mode);
    CHECK(get_problem("ex5").exact == ExactKind::fourier);
    CHECK(get_problem("ex6").exact == ExactKind::fourier);
    for (const Problem& p : all_problems()) {
        CHECK(p.t_init == (p.id == ProblemId::ex3 ? 1.0 : 0.0));
        CHECK(p.a0 == 0.0);
        CHECK(bool(p.w0));
    }
}

TEST_CASE("boundary-consistency flags match the initial profiles") {
    for (const Problem& p : all_problems()) {
        // Evaluate at the published viscosity: the shock profile's wall
        // values depend on nu_d and its flags describe the benchmark regime.
        const double nu =
            p.default_params.empty() ? 2.0 : p.default_params.front().nu_d;
        const double left = p.w0(p.a0, nu);
        const double right = p.w0(p.a1, nu);
        CHECK(p.left_consistent == (std::abs(left) <= 1e-12));
        CHECK(p.right_consistent == (std::abs(right) <= 1e-12));
    }
    // The stress pair: ex5 violates only the right wall, ex6 both.
    CHECK(get_problem("ex5").left_consistent);
    CHECK_FALSE(get_problem("ex5").right_consistent);
    CHECK_FALSE(get_problem("ex6").left_consistent);
    CHECK_FALSE(get_problem("ex6").right_consistent);
}

TEST_CASE("initial profiles evaluate to their formulas") {
    constexpr double pi = std::numbers::pi;
    CHECK(get_problem("ex1").w0(0.5, 2.0) == doctest::Approx(1.0));
    CHECK(get_problem("ex2").w0(0.5, 2.0) == doctest::Approx(1.0));
    CHECK(get_problem("ex5").w0(1.0, 2.0) == doctest::Approx(1.0));
    CHECK(get_problem("ex6").w0(0.0, 2.0) == doctest::Approx(1.0));
    CHECK(get_problem("ex2").w0(0.25, 0.2) == doctest::Approx(0.75));
    CHECK(get_problem("ex6").w0(1.0, 2.0) ==
          doctest::Approx(std::cos(pi / 4)));
    // ex3's profile is the shock solution frozen at its start time.
    const Problem& ex3 = get_problem("ex3");
    for (double x : {0.1, 0.4, 0.6, 1.0, 1.2})
        CHECK(ex3.w0(x, 0.002) ==
              doctest::Approx(shock_exact(x, 1.0, 0.002)).epsilon(1e-13));
    // ex4's profile is the two-mode solution at t = 0.
    const Problem& ex4 = get_problem("ex4");
    for (double x : {0.3, 0.9, 1.5})
        CHECK(ex4.w0(x, 0.001) ==
              doctest::Approx(two_mode_exact(x, 0.0, 0.001)).epsilon(1e-13));
}

TEST_CASE("antiderivatives exist exactly where the Fourier reference applies") {
    for (const Problem& p : all_problems()) {
        if (p.exact == ExactKind::fourier) {
            CHECK(bool(p.w0_integral));
            CHECK(p.w0_integral(0.0, 2.0) == 0.0);  // anchored at the wall
        }
    }
    CHECK_FALSE(bool(get_problem("ex3").w0_integral));
}

TEST_CASE("default parameter tuples point at their source tables") {
    std::set<int> seen;
    for (const Problem& p : all_problems())
        for (const TableParams& tp : p.default_params) {
            CHECK(tp.table_id >= 1);
            CHECK(tp.table_id <= 7);
            CHECK(tp.nu_d > 0.0);
            CHECK(tp.h > 0.0);
            CHECK(tp.tau > 0.0);
            CHECK_FALSE(tp.report_times.empty());
            CHECK(tp.citation.find("table " + std::to_string(tp.table_id)) !=
                  std::string::npos);
            seen.insert(tp.table_id);
        }
    CHECK(seen == std::set<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(get_problem("ex1").default_params.size() == 3);
    CHECK(get_problem("ex2").default_params.size() == 3);
    CHECK(get_problem("ex3").default_params.size() == 1);
    CHECK(get_problem("ex4").default_params.empty());
}

TEST_CASE("printed tables are complete and internally consistent") {
    const auto& tables = all_printed_tables();
    REQUIRE(tables.size() == 7);
    for (const PrintedTable& t : tables) {
        CHECK(&printed_table(t.id) == &t);
        CHECK_FALSE(t.times.empty());
        CHECK_FALSE(t.xs.empty());
        REQUIRE(t.values.size() == t.xs.size());
        for (const auto& row : t.values) {
            REQUIRE(row.size() == t.times.size());
            for (const auto& cell : row)
                REQUIRE(cell.size() == t.value_columns.size());
        }
        CHECK(t.present_column >= 0);
        CHECK(t.present_column < static_cast<int>(t.value_columns.size()));
        CHECK(t.exact_column >= 0);
        CHECK(t.exact_column < static_cast<int>(t.value_columns.size()));
        CHECK(t.exact_column != t.present_column);
        CHECK(t.citation.find("table " + std::to_string(t.id)) !=
              std::string::npos);
        // The grid parameters divide the printed x rows exactly.
        for (double x : t.xs) {
            const double cells = x / t.h;
            CHECK(std::abs(cells - std::llround(cells)) <= 1e-9);
        }
    }
    CHECK_THROWS_AS(printed_table(0), std::domain_error);
    CHECK_THROWS_AS(printed_table(8), std::domain_error);
}

TEST_CASE("transcription spot checks against the published cells") {
    const PrintedTable& t2 = printed_table(2);
    // Row x=0.5, T=1: fem 0.29532, asai 0.29200, present 0.2918410,
    // exact 0.29192.
    CHECK(t2.values[1][3][0] == 0.29532);
    CHECK(t2.values[1][3][1] == 0.29200);
    CHECK(t2.values[1][3][2] == 0.2918410);
    CHECK(t2.values[1][3][3] == 0.29192);

    const PrintedTable& t3 = printed_table(3);
    CHECK(t3.values[0][3][0] == 0.012236);  // x=0.25, T=20, numerical

    const PrintedTable& t6 = printed_table(6);
    CHECK(t6.values[2][3][0] == 0.029271);  // x=0.75, T=20, numerical

    const PrintedTable& t7 = printed_table(7);
    CHECK(t7.values[4][2][0] == 0.000020);  // x=1.0, T=3.5, exact
    CHECK(t7.values[4][2][1] == 2.03e-5);   // present
    CHECK(t7.values[4][2][2] == 0.000028);  // competitor
    REQUIRE(t7.footers.size() == 4);
    CHECK(t7.footers[0].second[0] == 0.50201);
    CHECK(t7.footers[1].second[0] == 29.70447);

    // Shock values printed as exact in table 7 agree with the closed form
    // at print precision.
    for (std::size_t r = 0; r < t7.xs.size(); ++r)
        for (std::size_t j = 0; j < t7.times.size(); ++j)
            CHECK(std::abs(t7.values[r][j][0] -
                           shock_exact(t7.xs[r], t7.times[j], t7.nu_d)) <=
                  5e-6);
}
