#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kfib {

// Column-named table of pre-formatted cells, emitted as CSV or as a JSON
// array of row objects. The two forms carry identical cell values.
struct OutputTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
};

}  // namespace kfib
