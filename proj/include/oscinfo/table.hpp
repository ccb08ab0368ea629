#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscinfo {

/// Rectangular numeric dataset with named columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::vector<double> column(std::size_t index) const;
};

/// Comment lines ('#'-prefixed), a header row, then one comma-separated row per
/// record. LF endings, no trailing separators, '.' decimal point, %.15g values.
void write_csv(std::ostream& out, const Table& table, const std::vector<std::string>& comments = {});

/// Strict reader for the format above. Throws InputError on any deviation
/// (ragged rows, empty fields, CR characters, unparsable numbers).
Table read_csv(std::istream& in, std::vector<std::string>* comments = nullptr);

std::string format_number(double value);

/// Line chart: column 0 on the x axis, one polyline per remaining column.
void write_line_svg(std::ostream& out, const Table& table, const std::string& title);

/// Heat map of a (x, t, value) triple table; x and t must form a full
/// rectangular grid in row-major (t outer) order.
void write_heatmap_svg(std::ostream& out, const Table& table, const std::string& title);

}  // namespace oscinfo
