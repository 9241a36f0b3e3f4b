#pragma once

#include <string>

#include "tautilt/count_engine.hpp"

namespace tautilt {

enum class TableFormat { Markdown, Csv, Json };

struct TableRequest {
    Family family = Family::TLin;
    int r_max = 6;
    int n_max = 12;
    TableFormat format = TableFormat::Markdown;
};

/// Rows are r = 1..r_max, columns n = 1..n_max.
///
/// markdown: a pipe table with an "r \ n" header row.
/// csv: one comma-separated row of values per r, no header.
/// json: {"family", "r_max", "n_max", "rows": [{"r", "values": [decimal strings]}]}.
///
/// Throws std::invalid_argument when r_max or n_max is below 1.
std::string render_table(CountEngine& engine, const TableRequest& request);

}  // namespace tautilt
