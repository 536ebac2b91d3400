#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tbc/num/tensor.hpp"

namespace tbc::lstm {

inline constexpr std::size_t kInputSize = 128;
inline constexpr std::size_t kDefaultHiddenSize = 10;

/// Gate order used everywhere: input, forget, output, candidate.
enum class Gate : std::size_t { input = 0, forget = 1, output = 2, candidate = 3 };
inline constexpr std::size_t kGateCount = 4;

std::string_view gate_name(Gate gate) noexcept;

struct GateWeights {
  num::Tensor2 input;      ///< H x 128
  num::Tensor2 recurrent;  ///< H x H
  num::Vector bias;        ///< H

  friend bool operator==(const GateWeights&, const GateWeights&) = default;
};

/// Weights of the single-layer LSTM plus its softmax head.
struct LstmParams {
  std::array<GateWeights, kGateCount> gates;
  num::Tensor2 head;       ///< K x H
  num::Vector head_bias;   ///< K
  std::uint64_t seed = 0;  ///< initialisation seed, informational

  static LstmParams zeros(std::size_t hidden, std::size_t classes);
  /// Every entry drawn i.i.d. from U(-scale, scale).
  static LstmParams uniform(std::size_t hidden, std::size_t classes, std::uint64_t seed, double scale = 0.08);

  GateWeights& gate(Gate g) noexcept { return gates[static_cast<std::size_t>(g)]; }
  const GateWeights& gate(Gate g) const noexcept { return gates[static_cast<std::size_t>(g)]; }

  std::size_t hidden_size() const noexcept { return head.cols(); }
  std::size_t num_classes() const noexcept { return head.rows(); }
  std::size_t parameter_count() const noexcept;

  /// Visits every parameter buffer in a fixed order (gates i, f, o, g each as
  /// input, recurrent, bias; then head, head bias).
  template <typename F>
  void for_each_buffer(F&& f) {
    for (auto& g : gates) {
      f(g.input.data());
      f(std::span<double>(g.recurrent.data()));
      f(std::span<double>(g.bias));
    }
    f(head.data());
    f(std::span<double>(head_bias));
  }
  template <typename F>
  void for_each_buffer(F&& f) const {
    for (const auto& g : gates) {
      f(g.input.data());
      f(std::span<const double>(g.recurrent.data()));
      f(std::span<const double>(g.bias));
    }
    f(head.data());
    f(std::span<const double>(head_bias));
  }

  std::vector<double> flatten() const;
  /// Throws tbc::Error when the length differs from parameter_count().
  void assign(std::span<const double> flat);
  /// Validates shapes against (hidden, classes) and finiteness.
  void validate() const;

  friend bool operator==(const LstmParams& a, const LstmParams& b) {
    return a.gates == b.gates && a.head == b.head && a.head_bias == b.head_bias;
  }
};

}  // namespace tbc::lstm
