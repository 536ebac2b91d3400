#pragma once

#include <string>
#include <vector>

#include "tbc/data/table.hpp"
#include "tbc/num/tensor.hpp"

namespace tbc::data {

/// Design-matrix encoding for the baseline models.
///
/// Numeric columns pass through with Missing replaced by the training mean.
/// Categorical and text columns expand to one indicator per distinct training
/// value (sorted) followed by one "unseen" indicator; Missing and values not
/// seen during fitting both light the unseen indicator.
class OneHotEncoder {
 public:
  struct ColumnLegend {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
    double mean = 0.0;                ///< numeric columns only
    std::vector<std::string> values;  ///< categorical / text columns only
  };

  OneHotEncoder() = default;

  /// Throws tbc::Error for an empty table.
  static OneHotEncoder fit(const Table& train);

  num::Tensor2 transform(const Table& table) const;
  std::size_t width() const noexcept { return width_; }
  const std::vector<ColumnLegend>& legend() const noexcept { return legend_; }
  /// Human-readable name per output column: "col", "col=value", "col=<unseen>".
  std::vector<std::string> column_names() const;

 private:
  std::vector<ColumnLegend> legend_;
  std::vector<std::size_t> offsets_;
  std::size_t width_ = 0;
};

struct EncodedTable {
  num::Tensor2 matrix;
  std::vector<std::string> columns;
};

/// Fits on `table` and encodes it in one go.
EncodedTable one_hot_encode(const Table& table);

}  // namespace tbc::data
