#include "tbc/data/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tbc/error.hpp"

namespace tbc::data {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view blanks = " \t\r\n";
  const auto first = s.find_first_not_of(blanks);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(blanks);
  return s.substr(first, last - first + 1);
}

bool needs_quotes(std::string_view s, char delimiter) {
  return s.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string_view::npos;
}

void write_field(std::ostream& out, std::string_view s, char delimiter) {
  if (!needs_quotes(s, delimiter)) {
    out << s;
    return;
  }
  out << '"';
  for (char ch : s) {
    if (ch == '"') out << '"';
    out << ch;
  }
  out << '"';
}

FeatureValue parse_cell(const std::string& cell, ColumnKind kind) {
  switch (kind) {
    case ColumnKind::numeric: {
      double v = 0.0;
      return parse_number(cell, v) ? FeatureValue::numeric(v) : FeatureValue::missing();
    }
    case ColumnKind::categorical:
      return cell.empty() ? FeatureValue::missing() : FeatureValue::categorical(cell);
    case ColumnKind::text:
      return cell.empty() ? FeatureValue::missing() : FeatureValue::text(cell);
    case ColumnKind::label:
      break;
  }
  throw Error("label column passed to parse_cell");
}

}  // namespace

std::vector<std::vector<std::string>> parse_csv_records(std::istream& in, char delimiter) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    // A line holding nothing at all is skipped rather than read as one empty field.
    if (!(record.empty() && field.empty() && !field_started)) {
      end_field();
      records.push_back(std::move(record));
    }
    record.clear();
  };

  char ch = 0;
  while (in.get(ch)) {
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"') {
      in_quotes = true;
      field_started = true;
    } else if (ch == delimiter) {
      end_field();
      field_started = true;
    } else if (ch == '\n') {
      end_record();
    } else if (ch == '\r') {
      if (in.peek() == '\n') continue;
      end_record();
    } else {
      field.push_back(ch);
    }
  }
  if (in_quotes) throw Error("unterminated quoted field at end of input");
  end_record();
  return records;
}

Table read_csv(std::istream& in, const Schema& schema, const CsvOptions& options) {
  auto records = parse_csv_records(in, options.delimiter);
  const auto& columns = schema.columns();
  std::size_t first = 0;

  if (options.header) {
    if (records.empty()) throw Error("CSV input has no header row");
    const auto& header = records.front();
    if (header.size() != columns.size()) {
      throw Error("header has " + std::to_string(header.size()) + " columns, schema has " +
                  std::to_string(columns.size()));
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (trim(header[c]) != columns[c].name) {
        throw Error("header column " + std::to_string(c) + " is '" + header[c] +
                    "', schema expects '" + columns[c].name + "'");
      }
    }
    first = 1;
  }

  std::vector<Row> rows;
  std::vector<std::string> labels;
  rows.reserve(records.size() - first);
  labels.reserve(records.size() - first);
  for (std::size_t r = first; r < records.size(); ++r) {
    auto& rec = records[r];
    if (rec.size() != columns.size()) {
      throw Error("ragged row " + std::to_string(r - first) + ": " + std::to_string(rec.size()) +
                  " fields, expected " + std::to_string(columns.size()));
    }
    Row row;
    row.reserve(columns.size() - 1);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].kind == ColumnKind::label) {
        labels.emplace_back(trim(rec[c]));
      } else {
        row.push_back(parse_cell(rec[c], columns[c].kind));
      }
    }
    rows.push_back(std::move(row));
  }
  return Table(schema, std::move(rows), std::move(labels));
}

Table load_csv(const std::filesystem::path& path, const Schema& schema, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open CSV file", path.string());
  try {
    return read_csv(in, schema, options);
  } catch (const FileError&) {
    throw;
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_csv(std::ostream& out, const Table& table, char delimiter) {
  const auto& columns = table.schema().columns();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out << delimiter;
    write_field(out, columns[c].name, delimiter);
  }
  out << '\n';
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::size_t feature = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << delimiter;
      if (columns[c].kind == ColumnKind::label) {
        write_field(out, table.labels()[r], delimiter);
        continue;
      }
      const auto& v = table.rows()[r][feature++];
      switch (v.kind()) {
        case ValueKind::numeric:
          out << format_number(v.as_number());
          break;
        case ValueKind::categorical:
        case ValueKind::text:
          write_field(out, v.as_string(), delimiter);
          break;
        case ValueKind::missing:
          break;
      }
    }
    out << '\n';
  }
}

Schema parse_schema(std::string_view text) {
  std::vector<Column> columns;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.rfind('=');
    if (eq == std::string_view::npos) {
      throw Error("schema line " + std::to_string(line_no) + ": expected 'name = kind'");
    }
    auto name = trim(line.substr(0, eq));
    auto kind = trim(line.substr(eq + 1));
    if (name.empty()) throw Error("schema line " + std::to_string(line_no) + ": empty column name");
    columns.push_back({std::string(name), parse_column_kind(kind)});
  }
  return Schema(std::move(columns));
}

Schema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open schema file", path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_schema(buffer.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::string format_schema(const Schema& schema) {
  std::string out;
  for (const auto& c : schema.columns()) {
    out += c.name;
    out += " = ";
    out += to_string(c.kind);
    out += '\n';
  }
  return out;
}

bool parse_number(std::string_view text, double& out) noexcept {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) return false;
  out = v;
  return true;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // folds -0 into 0
  std::array<char, 400> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buf.data(), ptr);
}

}  // namespace tbc::data
