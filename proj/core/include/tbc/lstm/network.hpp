#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "tbc/lstm/params.hpp"
#include "tbc/num/tensor.hpp"
#include "tbc/text/serializer.hpp"

namespace tbc::lstm {

struct CellState {
  num::Vector h;
  num::Vector c;
};

/// One LSTM step:
///   i = s(Wi x + Ui h + bi), f = s(Wf x + Uf h + bf), o = s(Wo x + Uo h + bo),
///   g = tanh(Wg x + Ug h + bg), c' = f*c + i*g, h' = o*tanh(c').
/// `x` is a dense 128-wide input. Throws tbc::Error on shape mismatch.
CellState lstm_step(std::span<const double> x, std::span<const double> h_prev, std::span<const double> c_prev,
                    const LstmParams& params);
/// Same step for a one-hot input given by its character code.
CellState lstm_step(std::uint8_t code, std::span<const double> h_prev, std::span<const double> c_prev,
                    const LstmParams& params);

/// Runs the cell over the whole sequence from zero state and returns
/// softmax(V h_T + c). Throws tbc::Error for an empty sequence.
num::Vector forward(const text::OneHotSequence& sequence, const LstmParams& params);

/// Final hidden state after the whole sequence.
num::Vector final_hidden(const text::OneHotSequence& sequence, const LstmParams& params);

struct BackwardResult {
  LstmParams gradients;
  num::Vector probabilities;
  double loss = 0.0;
};

/// Exact gradient of cross_entropy(forward(sequence), target) with respect to
/// every parameter, by backpropagation through the full sequence.
BackwardResult backward(const text::OneHotSequence& sequence, std::size_t target, const LstmParams& params);

/// Adds the gradient for one sequence into `gradients` (same shapes as
/// `params`) and returns that sequence's loss.
double accumulate_gradients(const text::OneHotSequence& sequence, std::size_t target, const LstmParams& params,
                            LstmParams& gradients);

/// Cross-entropy loss of one sequence; used by gradient checks.
double sequence_loss(const text::OneHotSequence& sequence, std::size_t target, const LstmParams& params);

}  // namespace tbc::lstm
