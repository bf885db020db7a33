#pragma once

#include <string>
#include <variant>
#include <vector>

namespace fracplap {

/// Flat result table with deterministic CSV / JSON rendering.
/// Doubles are written in shortest round-trip decimal.
struct Table {
  using Cell = std::variant<double, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells);
  std::string to_csv() const;
  std::string to_json() const;
  std::string render(const std::string& format) const; // "csv" | "json"
};

/// Shortest round-trip decimal for a double.
std::string format_double(double v);

} // namespace fracplap
