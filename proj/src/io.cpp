#include "wer/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wer/errors.hpp"

namespace wer {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : width_(columns.size()) {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (j) body_ += ',';
    body_ += columns[j];
  }
  body_ += '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::vector<double>(values));
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != width_) throw IoError("csv row width mismatch");
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) body_ += ',';
    body_ += format_real(values[j]);
  }
  body_ += '\n';
}

int CsvTable::column_index(const std::string& name) const {
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (columns[j] == name) return static_cast<int>(j);
  return -1;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) {
      if (header) {
        table.columns.push_back(cell);
      } else {
        try {
          row.push_back(std::stod(cell));
        } catch (const std::exception&) {
          throw IoError("csv: non-numeric cell '" + cell + "'");
        }
      }
    }
    if (!header) {
      if (row.size() != table.columns.size()) throw IoError("csv: ragged row");
      table.rows.push_back(std::move(row));
    }
    header = false;
  }
  if (table.columns.empty()) throw IoError("csv: empty input");
  return table;
}

CsvTable read_csv(const std::filesystem::path& file) { return parse_csv(read_text_file(file)); }

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + file.string());
  out << text;
  if (!out) throw IoError("write failed: " + file.string());
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open: " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wer
