#include <benchmark/benchmark.h>

#include <random>

#include "tbc/baselines/forest.hpp"
#include "tbc/baselines/tree.hpp"
#include "tbc/data/one_hot.hpp"
#include "tbc/lstm/network.hpp"
#include "tbc/synth/tasks.hpp"
#include "tbc/text/serializer.hpp"

namespace {

tbc::text::OneHotSequence sequence_of(std::size_t length) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> code(32, 126);
  tbc::text::OneHotSequence s;
  for (std::size_t i = 0; i < length; ++i) s.indices.push_back(static_cast<std::uint8_t>(code(rng)));
  return s;
}

void BM_LstmForward(benchmark::State& state) {
  const auto seq = sequence_of(static_cast<std::size_t>(state.range(0)));
  const auto params = tbc::lstm::LstmParams::uniform(10, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tbc::lstm::forward(seq, params));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LstmForward)->Arg(40)->Arg(160);

void BM_LstmBackward(benchmark::State& state) {
  const auto seq = sequence_of(static_cast<std::size_t>(state.range(0)));
  const auto params = tbc::lstm::LstmParams::uniform(10, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tbc::lstm::backward(seq, 1, params));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LstmBackward)->Arg(40)->Arg(160);

void BM_Serialize(benchmark::State& state) {
  const std::vector<tbc::data::FeatureValue> row{tbc::data::FeatureValue::numeric(1234.567),
                                                 tbc::data::FeatureValue::categorical("Private"),
                                                 tbc::data::FeatureValue::text("side-effect")};
  for (auto _ : state) benchmark::DoNotOptimize(tbc::text::encode_chars(tbc::text::serialize_instance(row, 0).text));
}
BENCHMARK(BM_Serialize);

// One-hot string-equivalence data: wide and sparse, the regime where trees grow large.
struct Encoded {
  tbc::num::Tensor2 X;
  std::vector<std::size_t> y;
};

Encoded string_equivalence(std::size_t rows) {
  auto spec = tbc::synth::TaskSpec::defaults(tbc::synth::TaskKind::string_equivalence, 0);
  spec.train_rows = rows;
  spec.test_rows = 1;
  const auto train = tbc::synth::generate(spec).first;
  auto enc = tbc::data::one_hot_encode(train);
  Encoded out{std::move(enc.matrix), {}};
  for (const auto& l : train.labels()) out.y.push_back(l == "1" ? 1 : 0);
  return out;
}

void BM_CartFit(benchmark::State& state) {
  const auto data = string_equivalence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tbc::baselines::dt_fit(data.X, data.y, 2));
}
BENCHMARK(BM_CartFit)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ForestFit(benchmark::State& state) {
  const auto data = string_equivalence(500);
  tbc::baselines::ForestConfig config;
  config.n_trees = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tbc::baselines::rf_fit(data.X, data.y, 2, config));
}
BENCHMARK(BM_ForestFit)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
