#include "tbc/data/one_hot.hpp"

#include <algorithm>

#include "tbc/error.hpp"

namespace tbc::data {

OneHotEncoder OneHotEncoder::fit(const Table& train) {
  if (train.empty()) throw Error("one-hot encoding needs a non-empty table");

  OneHotEncoder enc;
  const auto columns = train.schema().feature_columns();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    ColumnLegend legend{columns[c].name, columns[c].kind, 0.0, {}};
    enc.offsets_.push_back(enc.width_);
    if (columns[c].kind == ColumnKind::numeric) {
      double sum = 0.0;
      std::size_t count = 0;
      for (const auto& row : train.rows()) {
        if (row[c].is_missing()) continue;
        sum += row[c].as_number();
        ++count;
      }
      legend.mean = count ? sum / static_cast<double>(count) : 0.0;
      enc.width_ += 1;
    } else {
      for (const auto& row : train.rows()) {
        if (!row[c].is_missing()) legend.values.push_back(row[c].as_string());
      }
      std::sort(legend.values.begin(), legend.values.end());
      legend.values.erase(std::unique(legend.values.begin(), legend.values.end()), legend.values.end());
      enc.width_ += legend.values.size() + 1;
    }
    enc.legend_.push_back(std::move(legend));
  }
  return enc;
}

num::Tensor2 OneHotEncoder::transform(const Table& table) const {
  if (table.schema().feature_count() != legend_.size()) {
    throw Error("one-hot encoder was fitted on a table with a different column count");
  }
  num::Tensor2 out(table.size(), width_);
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& row = table.rows()[r];
    for (std::size_t c = 0; c < legend_.size(); ++c) {
      const auto& lg = legend_[c];
      const auto offset = offsets_[c];
      if (lg.kind == ColumnKind::numeric) {
        out(r, offset) = row[c].is_missing() ? lg.mean : row[c].as_number();
        continue;
      }
      std::size_t slot = lg.values.size();
      if (!row[c].is_missing()) {
        const auto& v = row[c].as_string();
        auto it = std::lower_bound(lg.values.begin(), lg.values.end(), v);
        if (it != lg.values.end() && *it == v) slot = static_cast<std::size_t>(it - lg.values.begin());
      }
      out(r, offset + slot) = 1.0;
    }
  }
  return out;
}

std::vector<std::string> OneHotEncoder::column_names() const {
  std::vector<std::string> names;
  names.reserve(width_);
  for (const auto& lg : legend_) {
    if (lg.kind == ColumnKind::numeric) {
      names.push_back(lg.name);
      continue;
    }
    for (const auto& v : lg.values) names.push_back(lg.name + "=" + v);
    names.push_back(lg.name + "=<unseen>");
  }
  return names;
}

EncodedTable one_hot_encode(const Table& table) {
  const auto enc = OneHotEncoder::fit(table);
  return {enc.transform(table), enc.column_names()};
}

}  // namespace tbc::data
