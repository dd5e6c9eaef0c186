#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bohr {

struct TableCell {
    std::string row_label;
    std::string column;
    double expected; // reference value, 6 decimals
    double computed;
};

struct Table {
    int id = 0;
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::string> row_labels;
    std::vector<TableCell> cells;

    double max_deviation() const;
    std::string to_markdown(bool diff) const;
    std::string to_csv() const;
    nlohmann::json to_json(bool diff) const;
};

/// Recompute table 1, 2 or 3 with the certified root solver.
Table compute_table(int table_id);

} // namespace bohr
