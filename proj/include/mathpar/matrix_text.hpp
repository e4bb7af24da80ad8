#pragma once

#include <string>
#include <vector>

namespace mathpar {

/// `[[a,b],[c,d]]`.
inline std::string mathparMatrix(const std::vector<std::vector<std::string>>& rows) {
  std::string out = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += ",";
    out += "[";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) out += ",";
      out += rows[r][c];
    }
    out += "]";
  }
  return out + "]";
}

/// `\left(\begin{array}{cc}a & b \\ c & d \end{array}\right)`.
inline std::string latexMatrix(const std::vector<std::vector<std::string>>& rows, std::size_t columns) {
  std::string out = "\\left(\\begin{array}{" + std::string(columns, 'c') + "}";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += " \\\\ ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) out += " & ";
      out += rows[r][c];
    }
  }
  return out + " \\end{array}\\right)";
}

}  // namespace mathpar
