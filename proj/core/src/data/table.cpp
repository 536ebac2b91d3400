#include "tbc/data/table.hpp"

#include <algorithm>
#include <set>

#include "tbc/error.hpp"

namespace tbc::data {

std::string_view to_string(ColumnKind kind) noexcept {
  switch (kind) {
    case ColumnKind::numeric:
      return "numeric";
    case ColumnKind::categorical:
      return "categorical";
    case ColumnKind::text:
      return "text";
    case ColumnKind::label:
      break;
  }
  return "label";
}

ColumnKind parse_column_kind(std::string_view name) {
  for (auto kind : {ColumnKind::numeric, ColumnKind::categorical, ColumnKind::text,
                    ColumnKind::label}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error("unknown column kind '" + std::string(name) + "'");
}

Schema::Schema(std::vector<Column> columns) : columns_(std::move(columns)) {
  std::set<std::string_view> seen;
  std::size_t labels = 0;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (!seen.insert(columns_[i].name).second) {
      throw Error("duplicate column name '" + columns_[i].name + "'");
    }
    if (columns_[i].kind == ColumnKind::label) {
      ++labels;
      label_position_ = i;
    }
  }
  if (labels != 1) {
    throw Error("schema must have exactly one label column, found " + std::to_string(labels));
  }
}

std::vector<Column> Schema::feature_columns() const {
  std::vector<Column> out;
  out.reserve(feature_count());
  for (const auto& c : columns_) {
    if (c.kind != ColumnKind::label) out.push_back(c);
  }
  return out;
}

namespace {

bool kind_matches(ColumnKind column, ValueKind value) {
  switch (value) {
    case ValueKind::missing:
      return true;
    case ValueKind::numeric:
      return column == ColumnKind::numeric;
    case ValueKind::categorical:
      return column == ColumnKind::categorical;
    case ValueKind::text:
      return column == ColumnKind::text;
  }
  return false;
}

}  // namespace

Table::Table(Schema schema, std::vector<Row> rows, std::vector<std::string> labels)
    : schema_(std::move(schema)), rows_(std::move(rows)), labels_(std::move(labels)) {
  if (rows_.size() != labels_.size()) {
    throw Error("table has " + std::to_string(rows_.size()) + " rows but " +
                std::to_string(labels_.size()) + " labels");
  }
  const auto features = schema_.feature_columns();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != features.size()) {
      throw Error("row " + std::to_string(r) + " has " + std::to_string(rows_[r].size()) +
                  " cells, schema expects " + std::to_string(features.size()));
    }
    for (std::size_t c = 0; c < features.size(); ++c) {
      if (!kind_matches(features[c].kind, rows_[r][c].kind())) {
        throw Error("row " + std::to_string(r) + ", column '" + features[c].name +
                    "': value kind does not match schema");
      }
    }
  }
}

Table Table::subset(std::span<const std::size_t> indices) const {
  Table out;
  out.schema_ = schema_;
  out.rows_.reserve(indices.size());
  out.labels_.reserve(indices.size());
  for (auto i : indices) {
    if (i >= rows_.size()) throw Error("row index out of range in subset");
    out.rows_.push_back(rows_[i]);
    out.labels_.push_back(labels_[i]);
  }
  return out;
}

ClassDictionary::ClassDictionary(std::span<const std::string> labels)
    : names_(labels.begin(), labels.end()) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

const std::string& ClassDictionary::name(std::size_t index) const {
  if (index >= names_.size()) throw Error("class index " + std::to_string(index) + " out of range");
  return names_[index];
}

bool ClassDictionary::contains(std::string_view name) const {
  return index_.find(name) != index_.end();
}

std::size_t ClassDictionary::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("unknown class '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::size_t> ClassDictionary::encode(std::span<const std::string> labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  return out;
}

}  // namespace tbc::data
