#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "oscinfo/errors.hpp"
#include "oscinfo/table.hpp"

namespace oscinfo {

std::vector<double> Table::column(std::size_t index) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(index));
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

void write_csv(std::ostream& out, const Table& table, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) out << ',';
    out << table.columns[j];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << format_number(row[j]);
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_strict(const std::string& s, std::size_t line_no) {
  if (s.empty()) throw InputError("empty CSV field on line " + std::to_string(line_no));
  for (char c : s) {
    const bool ok = (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' ||
                    c == 'E' || c == 'i' || c == 'n' || c == 'f' || c == 'a';
    if (!ok) throw InputError("invalid character in CSV number on line " + std::to_string(line_no));
  }
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  // ERANGE on underflow still yields the nearest subnormal, which round-trips
  if (end != s.c_str() + s.size() || (errno == ERANGE && std::isinf(v))) {
    throw InputError("unparsable CSV number '" + s + "' on line " + std::to_string(line_no));
  }
  return v;
}

}  // namespace

Table read_csv(std::istream& in, std::vector<std::string>* comments) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find('\r') != std::string::npos) {
      throw InputError("CR line ending on line " + std::to_string(line_no));
    }
    if (!have_header && !line.empty() && line.front() == '#') {
      if (comments) comments->push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    if (!have_header) {
      table.columns = split(line);
      for (const auto& c : table.columns) {
        if (c.empty()) throw InputError("empty CSV column name");
      }
      have_header = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != table.columns.size()) {
      throw InputError("CSV row " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                       " fields, header has " + std::to_string(table.columns.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_strict(f, line_no));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw InputError("CSV has no header row");
  return table;
}

}  // namespace oscinfo
