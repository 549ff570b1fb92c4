#pragma once

/// The published benchmark tables, transcribed verbatim (including known
/// misprints) so runs can be diffed against them cell by cell.

#include "burgers7/problems.hpp"

#include <string>
#include <vector>

namespace burgers7 {

/// One published table. values[r][t][c] is the printed number for row
/// abscissa xs[r], report time times[t], and column c of value_columns.
struct PrintedTable {
    int id = 0;
    std::string problem;  ///< ex1..ex6
    double nu_d = 0.0;
    double h = 0.0;
    double tau = 0.0;
    std::string citation;
    std::vector<double> times;
    std::vector<std::string> value_columns;
    std::vector<double> xs;
    std::vector<std::vector<std::vector<double>>> values;
    /// Footer rows (error norms etc.): label -> one value per time.
    std::vector<std::pair<std::string, std::vector<double>>> footers;
    int present_column = 0;  ///< index of this method's column
    int exact_column = -1;   ///< index of the printed reference column
};

/// Returns the transcription of table 1..7; throws outside that range.
const PrintedTable& printed_table(int id);

const std::vector<PrintedTable>& all_printed_tables();

}  // namespace burgers7
