#include "burgers7/tables.hpp"

#include <stdexcept>
#include <utility>

namespace burgers7 {
namespace {

PrintedTable make_table(
    int id, std::string problem, double nu_d, double h, double tau,
    std::string citation, std::vector<double> times,
    std::vector<std::string> columns, int present_column, int exact_column,
    std::vector<double> xs, std::vector<double> flat,
    std::vector<std::pair<std::string, std::vector<double>>> footers) {
    PrintedTable t;
    t.id = id;
    t.problem = std::move(problem);
    t.nu_d = nu_d;
    t.h = h;
    t.tau = tau;
    t.citation = std::move(citation);
    t.times = std::move(times);
    t.value_columns = std::move(columns);
    t.present_column = present_column;
    t.exact_column = exact_column;
    t.xs = std::move(xs);
    t.footers = std::move(footers);
    const std::size_t nt = t.times.size(), nc = t.value_columns.size();
    if (flat.size() != t.xs.size() * nt * nc)
        throw std::logic_error("make_table: cell count mismatch");
    std::size_t k = 0;
    for (std::size_t r = 0; r < t.xs.size(); ++r) {
        std::vector<std::vector<double>> row;
        for (std::size_t j = 0; j < nt; ++j) {
            std::vector<double> cell;
            for (std::size_t c = 0; c < nc; ++c) cell.push_back(flat[k++]);
            row.push_back(std::move(cell));
        }
        t.values.push_back(std::move(row));
    }
    return t;
}

std::vector<PrintedTable> build_tables() {
    std::vector<PrintedTable> tabs;

    // Cell order: for each x row, for each time, the per-column values.
    tabs.push_back(make_table(
        1, "ex1", 2.0, 0.0125, 0.0001,
        "table 1 (ex1, nu_d=2, h=0.0125, tau=0.0001)", {0.001, 0.01, 0.1},
        {"computed", "exact"}, 0, 1,
        {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9},
        {
            0.304976, 0.305088, 0.273145, 0.273239, 0.109509, 0.109538,  //
            0.580361, 0.580565, 0.521393, 0.521564, 0.209737, 0.209792,  //
            0.799363, 0.799621, 0.721630, 0.721852, 0.291820, 0.291896,  //
            0.940545, 0.940817, 0.854348, 0.854590, 0.347834, 0.347924,  //
            0.989926, 0.990174, 0.905483, 0.905713, 0.371482, 0.371577,  //
            0.942407, 0.942609, 0.868137, 0.868334, 0.358954, 0.359046,  //
            0.802375, 0.802522, 0.743949, 0.744098, 0.309827, 0.309905,  //
            0.583373, 0.583466, 0.543723, 0.543821, 0.227760, 0.227817,  //
            0.306837, 0.306881, 0.286951, 0.286999, 0.120656, 0.120687,  //
        },
        {{"linf", {2.71275e-4, 2.413e-4, 9.54852e-5}},
         {"l2", {6.41526e-5, 5.82562e-5, 2.27535e-5}}}));

    tabs.push_back(make_table(
        2, "ex1", 0.2, 0.0125, 0.0001,
        "table 2 (ex1, nu_d=0.2, h=0.0125, tau=0.0001)",
        {0.4, 0.6, 0.8, 1.0, 3.0}, {"fem", "asai", "present", "exact"}, 2, 3,
        {0.25, 0.50, 0.75},
        {
            0.31215, 0.30891, 0.3087531, 0.30889,  // x=0.25, T=0.4
            0.24360, 0.24076, 0.2406489, 0.24074,  //
            0.19815, 0.19570, 0.1956120, 0.19568,  //
            0.16473, 0.16259, 0.1625168, 0.16256,  //
            0.02771, 0.02722, 0.0271953, 0.02720,  //
            0.57293, 0.56970, 0.5694998, 0.56963,  // x=0.50
            0.45088, 0.44728, 0.4470928, 0.44721,  //
            0.36286, 0.35932, 0.3591441, 0.35924,  //
            0.29532, 0.29200, 0.2918410, 0.29192,  //
            0.04097, 0.04023, 0.0401946, 0.04021,  //
            0.63038, 0.62567, 0.6254715, 0.62544,  // x=0.75
            0.49268, 0.48747, 0.4871652, 0.48721,  //
            0.37912, 0.37415, 0.3738557, 0.37392,  //
            0.29204, 0.28766, 0.2874128, 0.28747,  //
            0.03038, 0.02979, 0.0297645, 0.02977,  //
        },
        {}));

    tabs.push_back(make_table(
        3, "ex1", 0.01, 0.0125, 0.01,
        "table 3 (ex1, nu_d=0.01, h=0.0125, tau=0.01)", {5.0, 10.0, 15.0, 20.0},
        {"numerical", "exact"}, 0, 1, {0.25, 0.50, 0.75},
        {
            0.046922, 0.046963, 0.024202, 0.024217, 0.016300, 0.016308,
            0.012236, 0.012240,  // x=0.25
            0.093998, 0.093920, 0.048414, 0.048421, 0.032431, 0.032439,
            0.023883, 0.023889,  // x=0.50
            0.141354, 0.140832, 0.071175, 0.071134, 0.044135, 0.044133,
            0.029155, 0.029159,  // x=0.75
        },
        {}));

    tabs.push_back(make_table(
        4, "ex2", 2.0, 0.0125, 0.0001,
        "table 4 (ex2, nu_d=2, h=0.0125, tau=0.0001)", {0.001, 0.01, 0.1},
        {"computed", "exact"}, 0, 1,
        {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9},
        {
            0.350702990, 0.350947, 0.294821969, 0.294953, 0.112863, 0.112892,
            0.630240123, 0.630504, 0.552873368, 0.553085, 0.216195, 0.216252,
            0.830425346, 0.830681, 0.749515568, 0.749751, 0.300887, 0.300966,
            0.951009637, 0.951242, 0.873232122, 0.873459, 0.358770, 0.358863,
            0.991793845, 0.991996, 0.919517990, 0.919723, 0.383324, 0.383422,
            0.952578533, 0.952752, 0.886057211, 0.886239, 0.370563, 0.370658,
            0.833164134, 0.833318, 0.771302597, 0.771464, 0.319985, 0.320066,
            0.633350801, 0.633500, 0.576137870, 0.576273, 0.235312, 0.235371,
            0.352988009, 0.353149, 0.310053369, 0.310136, 0.124687, 0.124718,
        },
        {{"linf", {2.64275e-4, 2.35909e-4, 9.85169e-5}},
         {"l2", {6.55334e-5, 6.07706e-5, 2.46429e-5}}}));

    tabs.push_back(make_table(
        5, "ex2", 0.2, 0.0125, 0.0001,
        "table 5 (ex2, nu_d=0.2, h=0.0125, tau=0.0001)",
        {0.4, 0.6, 0.8, 1.0, 3.0}, {"fem", "asai", "present", "exact"}, 2, 3,
        {0.25, 0.50, 0.75},
        {
            0.32091, 0.31754, 0.317374, 0.31752,  // x=0.25
            0.24910, 0.24616, 0.246045, 0.24614,  //
            0.20211, 0.19958, 0.199490, 0.19956,  //
            0.16782, 0.16562, 0.165549, 0.16560,  //
            0.02828, 0.02777, 0.027752, 0.02776,  //
            0.58788, 0.58460, 0.584404, 0.58458,  // x=0.50
            0.46174, 0.45805, 0.457862, 0.45798,  //
            0.37111, 0.36748, 0.367304, 0.36740,  //
            0.30183, 0.29843, 0.298267, 0.29834,  //
            // 0.41090 below reproduces the source table's misprint.
            0.04185, 0.41090, 0.041054, 0.04107,  //
            0.65054, 0.64586, 0.645660, 0.64562,  // x=0.75
            0.50825, 0.50294, 0.502629, 0.50268,  //
            0.39068, 0.38557, 0.385269, 0.38534,  //
            0.30057, 0.29605, 0.295794, 0.29586,  //
            0.03106, 0.03046, 0.030432, 0.03044,  //
        },
        {}));

    tabs.push_back(make_table(
        6, "ex2", 0.01, 0.0125, 0.01,
        "table 6 (ex2, nu_d=0.01, h=0.0125, tau=0.01)", {5.0, 10.0, 15.0, 20.0},
        {"numerical", "exact"}, 0, 1, {0.25, 0.50, 0.75},
        {
            0.047372, 0.047415, 0.024321, 0.024336, 0.016355, 0.016362,
            0.012268, 0.012272,  // x=0.25
            0.094895, 0.094814, 0.048653, 0.048660, 0.032542, 0.032550,
            0.023951, 0.023957,  // x=0.50
            0.142693, 0.142154, 0.071560, 0.071517, 0.044330, 0.044328,
            0.029271, 0.029275,  // x=0.75
        },
        {}));

    tabs.push_back(make_table(
        7, "ex3", 0.002, 0.0005, 0.01,
        "table 7 (ex3, nu_d=0.002, h=0.0005, tau=0.01)", {1.7, 3.0, 3.5},
        {"exact", "present", "competitor"}, 1, 0, {0.2, 0.4, 0.6, 0.8, 1.0},
        {
            0.117647, 0.117660, 0.11745, 0.066667, 0.066669, 0.06648,
            0.057143, 0.057144, 0.05697,  // x=0.2
            0.235294, 0.235420, 0.23456, 0.133333, 0.133355, 0.13295,
            0.114286, 0.114299, 0.11394,  // x=0.4
            0.352909, 0.353346, 0.34936, 0.200000, 0.200079, 0.19922,
            0.171429, 0.171478, 0.17082,  // x=0.6
            0.000000, 0.000000, 0.00000, 0.266618, 0.266808, 0.26478,
            0.228571, 0.228690, 0.22737,  // x=0.8
            0.000000, 0.000000, 0.00000, 0.000000, 0.000000, 0.00000,
            0.000020, 2.03e-5, 0.000028,  // x=1.0
        },
        {{"linf_1e3_present", {0.50201, 0.21289, 0.16870}},
         {"linf_1e3_competitor", {29.70447, 19.00976, 16.78871}},
         {"l2_1e3_present", {0.16675, 0.08135, 0.06695}},
         {"l2_1e3_competitor", {3.59366, 2.63510, 2.41729}}}));

    return tabs;
}

}  // namespace

const std::vector<PrintedTable>& all_printed_tables() {
    static const std::vector<PrintedTable> tables = build_tables();
    return tables;
}

const PrintedTable& printed_table(int id) {
    for (const PrintedTable& t : all_printed_tables())
        if (t.id == id) return t;
    throw std::domain_error("printed_table: table id must be 1..7");
}

}  // namespace burgers7
