#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbc/data/value.hpp"

namespace tbc::data {

enum class ColumnKind { numeric, categorical, text, label };

std::string_view to_string(ColumnKind kind) noexcept;
/// Parses "numeric" / "categorical" / "text" / "label". Throws tbc::Error.
ColumnKind parse_column_kind(std::string_view name);

struct Column {
  std::string name;
  ColumnKind kind;

  friend bool operator==(const Column&, const Column&) = default;
};

/// Ordered column list with exactly one label column and unique names.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<Column> columns);

  const std::vector<Column>& columns() const noexcept { return columns_; }
  std::size_t label_position() const noexcept { return label_position_; }
  const std::string& label_name() const { return columns_[label_position_].name; }

  /// Non-label columns in file order.
  std::vector<Column> feature_columns() const;
  std::size_t feature_count() const noexcept { return columns_.empty() ? 0 : columns_.size() - 1; }

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<Column> columns_;
  std::size_t label_position_ = 0;
};

using Row = std::vector<FeatureValue>;

class Table {
 public:
  Table() = default;
  /// Validates that every row has schema.feature_count() cells whose kinds
  /// agree with the schema (or are Missing), and that labels parallel rows.
  Table(Schema schema, std::vector<Row> rows, std::vector<std::string> labels);

  const Schema& schema() const noexcept { return schema_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  /// Rows at the given indices, in the given order.
  Table subset(std::span<const std::size_t> indices) const;

 private:
  Schema schema_;
  std::vector<Row> rows_;
  std::vector<std::string> labels_;
};

/// Distinct class names in lexicographic order, indexed 0..K-1.
class ClassDictionary {
 public:
  ClassDictionary() = default;
  explicit ClassDictionary(std::span<const std::string> labels);

  static ClassDictionary from_table(const Table& table) {
    return ClassDictionary(table.labels());
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t index) const;
  bool contains(std::string_view name) const;
  /// Throws tbc::Error for names outside the dictionary.
  std::size_t index_of(std::string_view name) const;
  std::vector<std::size_t> encode(std::span<const std::string> labels) const;

  friend bool operator==(const ClassDictionary&, const ClassDictionary&) = default;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace tbc::data
