#include <fracplap/table.hpp>

#include <fracplap/errors.hpp>

#include <nlohmann/json.hpp>

#include <charconv>

namespace fracplap {

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns.size())
    throw ConfigError("Table: row width does not match the header");
  rows.push_back(std::move(cells));
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i)
      out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i)
        out += ',';
      if (std::holds_alternative<double>(row[i])) {
        out += format_double(std::get<double>(row[i]));
      } else {
        const std::string& s = std::get<std::string>(row[i]);
        if (s.find(',') != std::string::npos) {
          out += '"';
          out += s;
          out += '"';
        } else {
          out += s;
        }
      }
    }
    out += '\n';
  }
  return out;
}

std::string Table::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (std::holds_alternative<double>(row[i]))
        obj[columns[i]] = std::get<double>(row[i]);
      else
        obj[columns[i]] = std::get<std::string>(row[i]);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string Table::render(const std::string& format) const {
  if (format == "csv")
    return to_csv();
  if (format == "json")
    return to_json();
  throw ConfigError("Table: unknown format '" + format + "'");
}

} // namespace fracplap
