#include "wfinite_cli/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace wfinite::cli {
namespace {

using nlohmann::ordered_json;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::string position(const std::string& source, std::size_t line, std::size_t column) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      cell);
}

ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_double(v);
          return v;
        } else {
          return v;
        }
      },
      cell);
}

// Inverse of cell_text.
ordered_json parse_cell(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  const char* first = text.data();
  const char* last = first + text.size();
  std::int64_t i = 0;
  if (auto [p, ec] = std::from_chars(first, last, i); ec == std::errc() && p == last && !text.empty()) {
    return i;
  }
  double d = 0.0;
  if (auto [p, ec] = std::from_chars(first, last, d); ec == std::errc() && p == last && !text.empty()) {
    return d;
  }
  return text;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

ordered_json json_to_cell(const ordered_json& v) {
  // Non-finite doubles travel as strings in JSON.
  if (v.is_string()) {
    const auto parsed = parse_cell(v.get<std::string>());
    if (parsed.is_number_float()) return parsed;
  }
  return v;
}

}  // namespace

std::vector<SortedSamples> read_sample_blocks(std::istream& in, const std::string& source) {
  std::vector<SortedSamples> blocks;
  std::vector<double> current;
  auto flush = [&] {
    if (!current.empty()) blocks.push_back(SortedSamples::from_unsorted(std::move(current)));
    current.clear();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      // A comment-only line neither adds a value nor splits blocks.
      const bool only_comment = line.find_first_not_of(" \t\r\f\v") == hash;
      line.resize(hash);
      if (only_comment) continue;
    }
    std::size_t begin = 0;
    while (begin < line.size() && is_space(line[begin])) ++begin;
    std::size_t end = line.size();
    while (end > begin && is_space(line[end - 1])) --end;
    if (begin == end) {
      flush();
      continue;
    }

    const char* first = line.data() + begin;
    const char* last = line.data() + end;
    if (*first == '+') ++first;
    double value = 0.0;
    const auto [stop, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || stop == first) {
      throw InputError(kExitUsage, position(source, line_no, begin + 1) + ": expected a real number");
    }
    if (stop != last) {
      throw InputError(kExitUsage, position(source, line_no, static_cast<std::size_t>(stop - line.data()) + 1) +
                                       ": unexpected text after number");
    }
    if (!std::isfinite(value)) {
      throw InputError(kExitUsage, position(source, line_no, begin + 1) + ": value is not finite");
    }
    current.push_back(value);
  }
  flush();
  if (blocks.empty()) throw InputError(kExitData, source + ": no samples");
  return blocks;
}

std::vector<SortedSamples> read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(kExitData, path + ": cannot open file");
  return read_sample_blocks(in, path);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

TableWriter::TableWriter(std::ostream& out, Format format, const Meta& config,
                         std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == Format::kCsv) {
    for (const auto& [key, value] : config) out_ << "# " << key << '=' << cell_text(value) << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      out_ << (i ? "," : "") << csv_escape(columns_[i]);
    }
    out_ << '\n';
  } else {
    ordered_json header;
    header["config"] = ordered_json::object();
    for (const auto& [key, value] : config) header["config"][key] = cell_json(value);
    header["columns"] = columns_;
    out_ << header.dump() << '\n';
  }
}

void TableWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("row width does not match columns");
  if (format_ == Format::kCsv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out_ << (i ? "," : "") << csv_escape(cell_text(cells[i]));
    }
    out_ << '\n';
  } else {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < cells.size(); ++i) obj[columns_[i]] = cell_json(cells[i]);
    out_ << obj.dump() << '\n';
  }
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no column named " + name);
}

Table read_table(std::istream& in) {
  Table table;
  std::string line;
  bool jsonl = false;
  bool have_columns = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_columns && !jsonl && line.front() == '{') jsonl = true;

    if (jsonl) {
      auto obj = ordered_json::parse(line);
      if (!have_columns) {
        for (const auto& [key, value] : obj.at("config").items()) table.config[key] = json_to_cell(value);
        table.columns = obj.at("columns").get<std::vector<std::string>>();
        have_columns = true;
        continue;
      }
      std::vector<ordered_json> row;
      for (const auto& name : table.columns) row.push_back(json_to_cell(obj.at(name)));
      table.rows.push_back(std::move(row));
    } else if (!have_columns && line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      table.config[line.substr(2, eq - 2)] = parse_cell(line.substr(eq + 1));
    } else if (!have_columns) {
      table.columns = split_csv(line);
      have_columns = true;
    } else {
      std::vector<ordered_json> row;
      for (const auto& field : split_csv(line)) row.push_back(parse_cell(field));
      if (row.size() != table.columns.size()) throw std::runtime_error("csv row width does not match header");
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace wfinite::cli
