#include "tbc/eval/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "tbc/error.hpp"

namespace tbc::eval {

std::string_view to_string(Averaging averaging) noexcept {
  return averaging == Averaging::binary ? "binary" : "micro";
}

EvalReport make_report(std::string model, std::string split, std::span<const std::string> class_names,
                       const ConfusionMatrix& cm, std::optional<std::size_t> positive) {
  if (class_names.size() != cm.classes()) throw Error("class names do not match the confusion matrix");
  EvalReport r;
  r.model = std::move(model);
  r.split = std::move(split);
  r.class_names.assign(class_names.begin(), class_names.end());
  r.confusion = cm;
  if (cm.classes() == 2) {
    r.averaging = Averaging::binary;
    r.positive = positive.value_or(1);
    r.metrics = binary_metrics(cm, *r.positive);
  } else {
    r.averaging = Averaging::micro;
    r.metrics = micro_metrics(cm);
  }
  for (std::size_t c = 0; c < cm.classes(); ++c) r.per_class.push_back(class_metrics(cm, c));
  return r;
}

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

namespace {

std::string format_seconds(double s) {
  char buf[32];
  if (s < 10.0) {
    std::snprintf(buf, sizeof buf, "%.3fs", s);
  } else {
    std::snprintf(buf, sizeof buf, "%.1fs", s);
  }
  return buf;
}

std::string render(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << ' ' << cells[c] << std::string(width[c] - cells[c].size(), ' ') << " |";
    }
    out << '\n';
  };
  line(header);
  out << '|';
  for (auto w : width) out << std::string(w + 2, '-') << '|';
  out << '\n';
  for (const auto& row : rows) line(row);
  return out.str();
}

}  // namespace

std::string markdown_table(std::span<const EvalReport> reports, bool with_times) {
  std::vector<std::string> header{"Model", "Split", "Accuracy", "Precision", "Recall"};
  if (with_times) {
    header.emplace_back("Train time");
    header.emplace_back("Inference time");
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    std::vector<std::string> row{r.model, r.split, format_score(r.metrics.accuracy),
                                 format_score(r.metrics.precision), format_score(r.metrics.recall)};
    if (with_times) {
      row.push_back(format_seconds(r.train_seconds));
      row.push_back(format_seconds(r.inference_seconds));
    }
    rows.push_back(std::move(row));
  }
  return render(header, rows);
}

std::string markdown_class_table(std::span<const EvalReport> reports) {
  std::vector<std::string> header{"Model", "Split", "Class", "Precision", "Recall", "Support"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    for (std::size_t c = 0; c < r.per_class.size(); ++c) {
      rows.push_back({r.model, r.split, r.class_names[c], format_score(r.per_class[c].precision),
                      format_score(r.per_class[c].recall), std::to_string(r.confusion.row_total(c))});
    }
  }
  return render(header, rows);
}

}  // namespace tbc::eval
