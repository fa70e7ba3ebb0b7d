#include "zeemanopt/output.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace zeemanopt {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // normalize -0
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

std::string TextTable::csv() const {
  std::ostringstream out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::string TextTable::table() const {
  std::vector<std::size_t> widths(header.size(), 0);
  auto grow = [&widths](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i)
      widths[i] = std::max(widths[i], cells[i].size());
  };
  grow(header);
  for (const auto& row : rows) grow(row);

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << cells[i];
      if (i + 1 < cells.size())
        out << std::string(widths[i] - std::min(widths[i], cells[i].size()), ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

}  // namespace zeemanopt
