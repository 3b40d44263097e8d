#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "wfinite/measure.hpp"

namespace wfinite::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

// Failure while reading user input; carries the process exit code.
class InputError : public std::runtime_error {
 public:
  InputError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

// One real per line, '#' starts a comment, blank lines separate blocks.
// Malformed numbers raise InputError(kExitUsage) with "source:line:column";
// input without any value raises InputError(kExitData).
std::vector<SortedSamples> read_sample_blocks(std::istream& in,
                                              const std::string& source);
std::vector<SortedSamples> read_sample_file(const std::string& path);

enum class Format { kCsv, kJsonl };

using Cell = std::variant<double, std::int64_t, std::string, bool>;
using Meta = std::vector<std::pair<std::string, Cell>>;

std::string format_double(double v);

// Streams one table: a config header, then rows.
//   csv:   "# key=value" lines, a column header line, data lines
//   jsonl: {"config": {...}, "columns": [...]} then one object per row
class TableWriter {
 public:
  TableWriter(std::ostream& out, Format format, const Meta& config,
              std::vector<std::string> columns);
  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
};

struct Table {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;

  // Index of a column; throws std::out_of_range when absent.
  std::size_t column(const std::string& name) const;
  const nlohmann::ordered_json& at(std::size_t row, const std::string& name) const {
    return rows.at(row).at(column(name));
  }
};

// Reads either format back; the format is detected from the first line.
Table read_table(std::istream& in);

}  // namespace wfinite::cli
