#include "tbc/eval/cross_validation.hpp"

#include "tbc/error.hpp"

namespace tbc::eval {

HoldoutOutcome evaluate_holdout(Classifier& model, const data::Table& train, const data::Table& test,
                                const data::ClassDictionary& classes, std::optional<std::size_t> positive) {
  const auto fit_time = timed([&] { model.fit(train, classes); });
  auto train_pred = timed([&] { return model.predict(train); });
  auto test_pred = timed([&] { return model.predict(test); });

  const auto train_truth = classes.encode(train.labels());
  const auto test_truth = classes.encode(test.labels());

  HoldoutOutcome out;
  out.train = make_report(model.name(), "train", classes.names(),
                          confusion(train_truth, train_pred.value, classes.size()), positive);
  out.test = make_report(model.name(), "test", classes.names(),
                         confusion(test_truth, test_pred.value, classes.size()), positive);
  out.train.train_seconds = out.test.train_seconds = fit_time.seconds;
  out.train.inference_seconds = train_pred.seconds;
  out.test.inference_seconds = test_pred.seconds;
  out.train.notes = out.test.notes = model.notes();
  out.train_predictions = std::move(train_pred.value);
  out.test_predictions = std::move(test_pred.value);
  return out;
}

EvalReport mean_report(std::span<const EvalReport> reports) {
  if (reports.empty()) throw Error("cannot average zero reports");
  EvalReport mean = reports.front();
  const auto n = static_cast<double>(reports.size());
  mean.metrics = {};
  for (auto& m : mean.per_class) m = {};
  mean.train_seconds = mean.inference_seconds = 0.0;
  mean.confusion = ConfusionMatrix(reports.front().confusion.classes());

  for (const auto& r : reports) {
    if (r.class_names != mean.class_names) throw Error("cannot average reports over different classes");
    mean.metrics.accuracy += r.metrics.accuracy / n;
    mean.metrics.precision += r.metrics.precision / n;
    mean.metrics.recall += r.metrics.recall / n;
    for (std::size_t c = 0; c < mean.per_class.size(); ++c) {
      mean.per_class[c].accuracy += r.per_class[c].accuracy / n;
      mean.per_class[c].precision += r.per_class[c].precision / n;
      mean.per_class[c].recall += r.per_class[c].recall / n;
    }
    mean.train_seconds += r.train_seconds / n;
    mean.inference_seconds += r.inference_seconds / n;
    mean.confusion += r.confusion;
  }
  return mean;
}

CrossValidationResult cross_validate(const ClassifierFactory& factory, const data::Table& table,
                                     const data::FoldPlan& folds, const data::ClassDictionary& classes,
                                     std::optional<std::size_t> positive) {
  if (folds.rows() != table.size()) {
    throw Error("fold plan covers " + std::to_string(folds.rows()) + " rows but the table has " +
                std::to_string(table.size()));
  }
  CrossValidationResult result;
  std::vector<EvalReport> train_reports;
  std::vector<EvalReport> test_reports;

  for (std::size_t f = 0; f < folds.k(); ++f) {
    FoldOutcome fold;
    fold.fold = f;
    fold.train_rows = folds.train_indices(f);
    fold.test_rows = folds.test_indices(f);
    auto model = factory();
    if (result.model.empty()) result.model = model->name();
    fold.outcome = evaluate_holdout(*model, table.subset(fold.train_rows), table.subset(fold.test_rows), classes,
                                    positive);
    train_reports.push_back(fold.outcome.train);
    test_reports.push_back(fold.outcome.test);
    result.folds.push_back(std::move(fold));
  }
  result.train = mean_report(train_reports);
  result.test = mean_report(test_reports);
  return result;
}

}  // namespace tbc::eval
