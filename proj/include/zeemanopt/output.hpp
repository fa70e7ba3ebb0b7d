#pragma once

#include <string>
#include <vector>

namespace zeemanopt {

// 9 significant digits, %g style; '.' decimal separator, no locale. The
// printed text parses back to the same value at the printed precision.
std::string format_number(double value);

// A rectangular report: one header row plus data rows. Cells are preformatted
// strings so CSV output is byte-reproducible.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const;    // comma separated, \n line endings, header first
  std::string table() const;  // aligned human-readable rendering
};

}  // namespace zeemanopt
