#include "tbc/lstm/params.hpp"

#include <algorithm>
#include <random>

#include "tbc/error.hpp"

namespace tbc::lstm {

std::string_view gate_name(Gate gate) noexcept {
  switch (gate) {
    case Gate::input:
      return "input";
    case Gate::forget:
      return "forget";
    case Gate::output:
      return "output";
    case Gate::candidate:
      break;
  }
  return "candidate";
}

LstmParams LstmParams::zeros(std::size_t hidden, std::size_t classes) {
  if (hidden == 0 || classes == 0) throw Error("LSTM needs a positive hidden size and class count");
  LstmParams p;
  for (auto& g : p.gates) {
    g.input = num::Tensor2(hidden, kInputSize);
    g.recurrent = num::Tensor2(hidden, hidden);
    g.bias.assign(hidden, 0.0);
  }
  p.head = num::Tensor2(classes, hidden);
  p.head_bias.assign(classes, 0.0);
  return p;
}

LstmParams LstmParams::uniform(std::size_t hidden, std::size_t classes, std::uint64_t seed, double scale) {
  auto p = zeros(hidden, classes);
  p.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  p.for_each_buffer([&](std::span<double> buf) {
    for (auto& v : buf) v = dist(rng);
  });
  return p;
}

std::size_t LstmParams::parameter_count() const noexcept {
  std::size_t n = 0;
  for_each_buffer([&](std::span<const double> buf) { n += buf.size(); });
  return n;
}

std::vector<double> LstmParams::flatten() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  for_each_buffer([&](std::span<const double> buf) { flat.insert(flat.end(), buf.begin(), buf.end()); });
  return flat;
}

void LstmParams::assign(std::span<const double> flat) {
  if (flat.size() != parameter_count()) throw Error("flat parameter vector has the wrong length");
  std::size_t pos = 0;
  for_each_buffer([&](std::span<double> buf) {
    std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(pos), buf.size(), buf.begin());
    pos += buf.size();
  });
}

void LstmParams::validate() const {
  const auto h = hidden_size();
  const auto k = num_classes();
  if (h == 0 || k == 0) throw Error("LSTM parameters are empty");
  for (const auto& g : gates) {
    if (g.input.rows() != h || g.input.cols() != kInputSize || g.recurrent.rows() != h ||
        g.recurrent.cols() != h || g.bias.size() != h) {
      throw Error("LSTM gate weights have inconsistent shapes");
    }
  }
  if (head_bias.size() != k) throw Error("LSTM head bias has the wrong length");
  bool finite = true;
  for_each_buffer([&](std::span<const double> buf) { finite = finite && num::all_finite(buf); });
  if (!finite) throw Error("LSTM parameters contain non-finite values");
}

}  // namespace tbc::lstm
