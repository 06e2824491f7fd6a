#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qst::cli {

// Empty cell, integer, real, text or flag.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

/// Tabular output shared by every subcommand. Rows keep insertion order so
/// identical runs serialize byte for byte.
class Report {
public:
    explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<Cell> row);
    void set_config(const std::string& key, Cell value);
    void set_summary(const std::string& key, Cell value);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    // nullptr when the key was never set.
    const Cell* summary(const std::string& key) const;

    // Header, one line per row, then "# key=value" summary lines.
    void write_csv(std::ostream& os) const;
    // {"config": {...}, "rows": [...], "summary": {...}}
    void write_json(std::ostream& os) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::pair<std::string, Cell>> config_;
    std::vector<std::pair<std::string, Cell>> summary_;
};

// %.17g; non-finite values render as nan / inf / -inf.
std::string format_real(double v);
std::string format_cell(const Cell& c);
nlohmann::ordered_json to_json(const Cell& c);

} // namespace qst::cli
