#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

namespace wer {

/// Round-trip (17 significant digit) decimal formatting for reals; all
/// emitted files use this so reruns are byte-identical.
std::string format_real(double v);

/// Minimal CSV emitter: fixed header, rows of reals.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);
  const std::string& str() const { return body_; }

 private:
  std::size_t width_;
  std::string body_;
};

/// Parsed CSV with a header line; numeric cells only.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column_index(const std::string& name) const;  // -1 when missing
};

CsvTable read_csv(const std::filesystem::path& file);
CsvTable parse_csv(const std::string& text);

void write_text_file(const std::filesystem::path& file, const std::string& text);
std::string read_text_file(const std::filesystem::path& file);

}  // namespace wer
