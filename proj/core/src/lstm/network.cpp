#include "tbc/lstm/network.hpp"

#include <cmath>
#include <vector>

#include "tbc/error.hpp"
#include "tbc/num/functions.hpp"

namespace tbc::lstm {

namespace {

constexpr std::size_t kI = static_cast<std::size_t>(Gate::input);
constexpr std::size_t kF = static_cast<std::size_t>(Gate::forget);
constexpr std::size_t kO = static_cast<std::size_t>(Gate::output);
constexpr std::size_t kG = static_cast<std::size_t>(Gate::candidate);

void check_state(std::span<const double> h_prev, std::span<const double> c_prev, const LstmParams& params) {
  const auto h = params.hidden_size();
  if (h_prev.size() != h || c_prev.size() != h) {
    throw Error("lstm_step: state length does not match hidden size " + std::to_string(h));
  }
}

// Pre-activations for all gates, given the input contribution already in `pre`.
void add_recurrent(const LstmParams& p, std::span<const double> h_prev, std::span<double> pre) {
  const auto hidden = p.hidden_size();
  for (std::size_t g = 0; g < kGateCount; ++g) {
    auto out = pre.subspan(g * hidden, hidden);
    num::gemv_accumulate(p.gates[g].recurrent, h_prev, out);
    for (std::size_t j = 0; j < hidden; ++j) out[j] += p.gates[g].bias[j];
  }
}

// Applies gate nonlinearities in place and produces (h, c).
void finish_step(std::span<double> act, std::span<const double> c_prev, std::span<double> c_out,
                 std::span<double> tanh_c, std::span<double> h_out, std::size_t hidden) {
  for (std::size_t j = 0; j < hidden; ++j) {
    const double i = num::sigmoid(act[kI * hidden + j]);
    const double f = num::sigmoid(act[kF * hidden + j]);
    const double o = num::sigmoid(act[kO * hidden + j]);
    const double g = std::tanh(act[kG * hidden + j]);
    act[kI * hidden + j] = i;
    act[kF * hidden + j] = f;
    act[kO * hidden + j] = o;
    act[kG * hidden + j] = g;
    c_out[j] = f * c_prev[j] + i * g;
    tanh_c[j] = std::tanh(c_out[j]);
    h_out[j] = o * tanh_c[j];
  }
}

// Activations recorded during the forward pass, laid out per time step.
struct Trace {
  std::size_t hidden = 0;
  std::size_t steps = 0;
  std::vector<double> act;     // steps x 4H, post-nonlinearity gate values
  std::vector<double> cell;    // (steps + 1) x H, row 0 is the zero initial state
  std::vector<double> hid;     // (steps + 1) x H
  std::vector<double> tanh_c;  // steps x H

  std::span<const double> h(std::size_t t) const { return {hid.data() + t * hidden, hidden}; }
  std::span<const double> c(std::size_t t) const { return {cell.data() + t * hidden, hidden}; }
};

Trace run_forward(const text::OneHotSequence& seq, const LstmParams& p) {
  if (seq.length() == 0) throw Error("cannot run the LSTM on an empty sequence");
  const auto hidden = p.hidden_size();
  const auto steps = seq.length();
  Trace tr;
  tr.hidden = hidden;
  tr.steps = steps;
  tr.act.assign(steps * kGateCount * hidden, 0.0);
  tr.cell.assign((steps + 1) * hidden, 0.0);
  tr.hid.assign((steps + 1) * hidden, 0.0);
  tr.tanh_c.assign(steps * hidden, 0.0);

  for (std::size_t t = 0; t < steps; ++t) {
    const std::size_t code = seq.indices[t];
    if (code >= kInputSize) throw Error("character code out of range");
    std::span<double> act(tr.act.data() + t * kGateCount * hidden, kGateCount * hidden);
    for (std::size_t g = 0; g < kGateCount; ++g) {
      const auto& w = p.gates[g].input;
      for (std::size_t j = 0; j < hidden; ++j) act[g * hidden + j] = w(j, code);
    }
    add_recurrent(p, tr.h(t), act);
    finish_step(act, tr.c(t), {tr.cell.data() + (t + 1) * hidden, hidden},
                {tr.tanh_c.data() + t * hidden, hidden}, {tr.hid.data() + (t + 1) * hidden, hidden}, hidden);
  }
  return tr;
}

num::Vector head_probabilities(const LstmParams& p, std::span<const double> h_last) {
  num::Vector logits(p.head_bias);
  num::gemv_accumulate(p.head, h_last, logits);
  num::softmax_inplace(logits);
  return logits;
}

}  // namespace

CellState lstm_step(std::span<const double> x, std::span<const double> h_prev, std::span<const double> c_prev,
                    const LstmParams& params) {
  if (x.size() != kInputSize) throw Error("lstm_step: input must have 128 entries");
  check_state(h_prev, c_prev, params);
  const auto hidden = params.hidden_size();
  std::vector<double> act(kGateCount * hidden, 0.0);
  for (std::size_t g = 0; g < kGateCount; ++g) {
    num::gemv_accumulate(params.gates[g].input, x, std::span<double>(act).subspan(g * hidden, hidden));
  }
  add_recurrent(params, h_prev, act);
  CellState out{num::Vector(hidden), num::Vector(hidden)};
  num::Vector tanh_c(hidden);
  finish_step(act, c_prev, out.c, tanh_c, out.h, hidden);
  return out;
}

CellState lstm_step(std::uint8_t code, std::span<const double> h_prev, std::span<const double> c_prev,
                    const LstmParams& params) {
  if (code >= kInputSize) throw Error("lstm_step: character code out of range");
  std::vector<double> x(kInputSize, 0.0);
  x[code] = 1.0;
  return lstm_step(x, h_prev, c_prev, params);
}

num::Vector final_hidden(const text::OneHotSequence& sequence, const LstmParams& params) {
  const auto tr = run_forward(sequence, params);
  const auto h = tr.h(tr.steps);
  return {h.begin(), h.end()};
}

num::Vector forward(const text::OneHotSequence& sequence, const LstmParams& params) {
  const auto tr = run_forward(sequence, params);
  return head_probabilities(params, tr.h(tr.steps));
}

double sequence_loss(const text::OneHotSequence& sequence, std::size_t target, const LstmParams& params) {
  return num::cross_entropy(forward(sequence, params), target);
}

double accumulate_gradients(const text::OneHotSequence& sequence, std::size_t target, const LstmParams& p,
                            LstmParams& grads) {
  const auto tr = run_forward(sequence, p);
  const auto hidden = tr.hidden;
  const auto classes = p.num_classes();
  if (target >= classes) throw Error("target class out of range");

  const auto h_last = tr.h(tr.steps);
  auto probs = head_probabilities(p, h_last);
  const double loss = num::cross_entropy(probs, target);

  // Below the probability floor the clamped loss is flat, so its gradient is zero.
  if (probs[target] < num::kProbabilityFloor) return loss;

  num::Vector dlogits = probs;
  dlogits[target] -= 1.0;
  num::outer_accumulate(grads.head, dlogits, h_last);
  for (std::size_t k = 0; k < classes; ++k) grads.head_bias[k] += dlogits[k];

  num::Vector dh(hidden, 0.0);
  num::gemv_transpose_accumulate(p.head, dlogits, dh);
  num::Vector dc(hidden, 0.0);
  num::Vector dpre(kGateCount * hidden, 0.0);
  num::Vector dh_prev(hidden, 0.0);

  for (std::size_t step = tr.steps; step-- > 0;) {
    const std::span<const double> act(tr.act.data() + step * kGateCount * hidden, kGateCount * hidden);
    const std::span<const double> tanh_c(tr.tanh_c.data() + step * hidden, hidden);
    const auto c_prev = tr.c(step);
    const auto h_prev = tr.h(step);

    for (std::size_t j = 0; j < hidden; ++j) {
      const double i = act[kI * hidden + j];
      const double f = act[kF * hidden + j];
      const double o = act[kO * hidden + j];
      const double g = act[kG * hidden + j];
      const double tc = tanh_c[j];

      const double dcj = dc[j] + dh[j] * o * (1.0 - tc * tc);
      dpre[kO * hidden + j] = dh[j] * tc * o * (1.0 - o);
      dpre[kI * hidden + j] = dcj * g * i * (1.0 - i);
      dpre[kF * hidden + j] = dcj * c_prev[j] * f * (1.0 - f);
      dpre[kG * hidden + j] = dcj * i * (1.0 - g * g);
      dc[j] = dcj * f;
    }

    const std::size_t code = sequence.indices[step];
    std::fill(dh_prev.begin(), dh_prev.end(), 0.0);
    for (std::size_t gi = 0; gi < kGateCount; ++gi) {
      const std::span<const double> d(dpre.data() + gi * hidden, hidden);
      auto& gw = grads.gates[gi];
      for (std::size_t j = 0; j < hidden; ++j) {
        gw.input(j, code) += d[j];
        gw.bias[j] += d[j];
      }
      num::outer_accumulate(gw.recurrent, d, h_prev);
      num::gemv_transpose_accumulate(p.gates[gi].recurrent, d, dh_prev);
    }
    std::swap(dh, dh_prev);
  }
  return loss;
}

BackwardResult backward(const text::OneHotSequence& sequence, std::size_t target, const LstmParams& params) {
  BackwardResult out{LstmParams::zeros(params.hidden_size(), params.num_classes()), {}, 0.0};
  out.loss = accumulate_gradients(sequence, target, params, out.gradients);
  out.probabilities = forward(sequence, params);
  return out;
}

}  // namespace tbc::lstm
