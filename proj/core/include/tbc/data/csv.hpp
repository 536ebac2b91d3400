#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tbc/data/table.hpp"

namespace tbc::data {

struct CsvOptions {
  char delimiter = ',';
  bool header = true;
};

/// Splits RFC-4180 style records: optional double-quote quoting, "" escapes,
/// embedded delimiters and newlines inside quotes, LF or CRLF line endings.
/// Blank lines are skipped.
std::vector<std::vector<std::string>> parse_csv_records(std::istream& in, char delimiter = ',');

/// Loads a CSV file whose columns follow `schema` in order.
///
/// Numeric cells that are empty or fail to parse become Missing; empty
/// categorical and text cells become Missing as well. Throws FileError when
/// the file is absent, and tbc::Error for ragged rows (the data row index is
/// reported) and for header names that disagree with the schema.
Table load_csv(const std::filesystem::path& path, const Schema& schema, const CsvOptions& options = {});
Table read_csv(std::istream& in, const Schema& schema, const CsvOptions& options = {});

/// Writes header plus rows; numbers use their shortest round-trip form.
void write_csv(std::ostream& out, const Table& table, char delimiter = ',');

/// Schema sidecar: one `column name = kind` entry per line, in column order.
/// Blank lines and lines starting with '#' are ignored.
Schema parse_schema(std::string_view text);
Schema load_schema(const std::filesystem::path& path);
std::string format_schema(const Schema& schema);

/// Parses a decimal number, tolerating surrounding blanks. Returns false for
/// anything else, including non-finite results.
bool parse_number(std::string_view text, double& out) noexcept;

/// Shortest decimal string that round-trips to `value`, never in exponent form.
std::string format_number(double value);

}  // namespace tbc::data
