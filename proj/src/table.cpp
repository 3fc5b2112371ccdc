#include "kfib/table.hpp"

#include <json.hpp>

#include "kfib/errors.hpp"

namespace kfib {

void OutputTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != headers.size()) {
    throw usage_error("row width does not match the header");
  }
  rows.push_back(std::move(cells));
}

void OutputTable::write_csv(std::ostream& os) const {
  auto write_line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != 0) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  write_line(headers);
  for (const auto& row : rows) write_line(row);
}

void OutputTable::write_json(std::ostream& os) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < headers.size(); ++i) obj[headers[i]] = row[i];
    out.push_back(std::move(obj));
  }
  os << out.dump(2) << '\n';
}

}  // namespace kfib
