#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "healthmon/rng.hpp"
#include "healthmon/vitals.hpp"

namespace healthmon {

// Single-hidden-layer feedforward network with sigmoid units throughout,
// trained by plain stochastic gradient descent on squared error:
//
//   h = sigmoid(W1 x + b1)        (n_hidden units)
//   y = sigmoid(w2 . h + b2)      (scalar in (0,1))
//   L = 1/2 (y - label)^2
//
// y > 0.5 signals the anomaly state (strict inequality).

// Normalized vitals in [0,1], ordered (spo2, hr, temp[, activity]).
using FeatureVector = std::vector<double>;

// Clinical windows mapped affinely onto [0,1]; values outside are clipped.
inline constexpr double kNormSpo2Lo = 70.0, kNormSpo2Hi = 100.0;
inline constexpr double kNormHrLo = 30.0, kNormHrHi = 200.0;
inline constexpr double kNormTempLo = 34.0, kNormTempHi = 42.0;

inline FeatureVector normalize(const VitalsSample& s, int n_inputs) {
  if (n_inputs != 3 && n_inputs != 4) {
    throw std::invalid_argument("n_inputs must be 3 or 4");
  }
  const auto unit = [](double v, double lo, double hi) {
    return std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
  };
  FeatureVector x{unit(s.spo2_pct, kNormSpo2Lo, kNormSpo2Hi),
                  unit(s.hr_bpm, kNormHrLo, kNormHrHi),
                  unit(s.temp_c, kNormTempLo, kNormTempHi)};
  if (n_inputs == 4) x.push_back(std::clamp(s.activity_level, 0.0, 1.0));
  return x;
}

struct MlpModel {
  int n_inputs = 0;
  int n_hidden = 0;
  std::vector<double> w1;  // n_hidden x n_inputs, row-major
  std::vector<double> b1;  // n_hidden
  std::vector<double> w2;  // 1 x n_hidden
  double b2 = 0.0;

  friend bool operator==(const MlpModel&, const MlpModel&) = default;
};

inline bool model_consistent(const MlpModel& m) {
  const auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  };
  return m.n_inputs >= 1 && m.n_hidden >= 1 &&
         m.w1.size() == static_cast<std::size_t>(m.n_hidden * m.n_inputs) &&
         m.b1.size() == static_cast<std::size_t>(m.n_hidden) &&
         m.w2.size() == static_cast<std::size_t>(m.n_hidden) && finite(m.w1) &&
         finite(m.b1) && finite(m.w2) && std::isfinite(m.b2);
}

struct Hyperparams {
  double learning_rate = 0.1;
  int epochs = 2000;
  std::uint64_t seed = 1;
  double init_scale = 0.5;
  double target_loss = 0.01;  // early stop when mean epoch loss reaches this
};

// Weights uniform in [-init_scale, +init_scale], biases zero; the draw order
// (w1 row-major, then w2) is part of the determinism contract.
inline MlpModel init_model(int n_inputs, int n_hidden, std::uint64_t seed,
                           double init_scale = 0.5) {
  if (n_inputs != 3 && n_inputs != 4) throw std::invalid_argument("n_inputs must be 3 or 4");
  if (n_hidden < 1) throw std::invalid_argument("n_hidden must be >= 1");
  if (init_scale < 0.0) throw std::invalid_argument("init_scale must be >= 0");
  Rng rng(seed);
  MlpModel m;
  m.n_inputs = n_inputs;
  m.n_hidden = n_hidden;
  m.w1.resize(static_cast<std::size_t>(n_hidden) * n_inputs);
  m.b1.assign(static_cast<std::size_t>(n_hidden), 0.0);
  m.w2.resize(static_cast<std::size_t>(n_hidden));
  for (double& w : m.w1) w = rng.uniform(-init_scale, init_scale);
  for (double& w : m.w2) w = rng.uniform(-init_scale, init_scale);
  return m;
}

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

namespace detail {

inline void check_input(const MlpModel& m, const FeatureVector& x) {
  if (x.size() != static_cast<std::size_t>(m.n_inputs)) {
    throw std::invalid_argument("feature vector length does not match model inputs");
  }
}

inline void forward_layers(const MlpModel& m, const FeatureVector& x,
                           std::vector<double>& hidden, double& output) {
  const auto n = static_cast<std::size_t>(m.n_inputs);
  const auto h = static_cast<std::size_t>(m.n_hidden);
  hidden.resize(h);
  double z2 = m.b2;
  for (std::size_t j = 0; j < h; ++j) {
    double z1 = m.b1[j];
    const double* row = m.w1.data() + j * n;
    for (std::size_t i = 0; i < n; ++i) z1 += row[i] * x[i];
    hidden[j] = sigmoid(z1);
    z2 += m.w2[j] * hidden[j];
  }
  output = sigmoid(z2);
}

}  // namespace detail

inline double forward(const MlpModel& m, const FeatureVector& x) {
  detail::check_input(m, x);
  std::vector<double> hidden;
  double y = 0.0;
  detail::forward_layers(m, x, hidden, y);
  return y;
}

// Loss gradients for all four parameter blocks at one example.
struct Gradients {
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
  double loss = 0.0;  // loss at the evaluation point
};

inline Gradients compute_gradients(const MlpModel& m, const FeatureVector& x, double label) {
  detail::check_input(m, x);
  const auto n = static_cast<std::size_t>(m.n_inputs);
  const auto h = static_cast<std::size_t>(m.n_hidden);

  std::vector<double> hidden;
  double y = 0.0;
  detail::forward_layers(m, x, hidden, y);

  Gradients g;
  g.loss = 0.5 * (y - label) * (y - label);
  const double d2 = (y - label) * y * (1.0 - y);  // dL/dz2
  g.b2 = d2;
  g.w2.resize(h);
  g.b1.resize(h);
  g.w1.resize(h * n);
  for (std::size_t j = 0; j < h; ++j) {
    g.w2[j] = d2 * hidden[j];
    const double d1 = d2 * m.w2[j] * hidden[j] * (1.0 - hidden[j]);  // dL/dz1_j
    g.b1[j] = d1;
    for (std::size_t i = 0; i < n; ++i) g.w1[j * n + i] = d1 * x[i];
  }
  return g;
}

// One stochastic gradient-descent step; returns the loss at the pre-update
// parameters.
inline double backprop_step(MlpModel& m, const FeatureVector& x, double label,
                            double learning_rate) {
  const Gradients g = compute_gradients(m, x, label);
  for (std::size_t i = 0; i < m.w1.size(); ++i) m.w1[i] -= learning_rate * g.w1[i];
  for (std::size_t j = 0; j < m.b1.size(); ++j) m.b1[j] -= learning_rate * g.b1[j];
  for (std::size_t j = 0; j < m.w2.size(); ++j) m.w2[j] -= learning_rate * g.w2[j];
  m.b2 -= learning_rate * g.b2;
  return g.loss;
}

struct LabeledExample {
  FeatureVector x;
  int label = 0;  // 0 or 1
};

using LabeledSet = std::vector<LabeledExample>;

struct TrainResult {
  std::vector<double> epoch_loss;  // mean pre-update loss per epoch
  int epochs_run = 0;
  bool reached_target = false;
};

// Per-example updates in a freshly shuffled order each epoch; stops early
// once the mean epoch loss reaches hp.target_loss.
inline TrainResult train(MlpModel& m, const LabeledSet& data, const Hyperparams& hp) {
  if (data.empty()) throw std::invalid_argument("training set is empty");
  for (const LabeledExample& ex : data) detail::check_input(m, ex.x);
  if (!(hp.learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
  if (hp.epochs < 1) throw std::invalid_argument("epochs must be >= 1");

  Rng rng(hp.seed);
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  TrainResult result;
  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    rng.shuffle(order);
    double sum = 0.0;
    for (const std::size_t i : order) {
      sum += backprop_step(m, data[i].x, static_cast<double>(data[i].label),
                           hp.learning_rate);
    }
    const double mean = sum / static_cast<double>(data.size());
    result.epoch_loss.push_back(mean);
    if (mean <= hp.target_loss) {
      result.reached_target = true;
      break;
    }
  }
  result.epochs_run = static_cast<int>(result.epoch_loss.size());
  return result;
}

// Anomaly iff the sigmoid output exceeds 0.5; exactly 0.5 is Normal.
inline PatientState classify(const MlpModel& m, const FeatureVector& x) {
  return forward(m, x) > 0.5 ? PatientState::Anomaly : PatientState::Normal;
}

struct Evaluation {
  double accuracy = 0.0;
  int tp = 0, tn = 0, fp = 0, fn = 0;  // positive = Anomaly

  int total() const { return tp + tn + fp + fn; }
};

inline Evaluation evaluate(const MlpModel& m, const LabeledSet& test) {
  if (test.empty()) throw std::invalid_argument("test set is empty");
  Evaluation ev;
  for (const LabeledExample& ex : test) {
    const bool predicted = classify(m, ex.x) == PatientState::Anomaly;
    const bool actual = ex.label == 1;
    if (predicted && actual) ++ev.tp;
    else if (!predicted && !actual) ++ev.tn;
    else if (predicted && !actual) ++ev.fp;
    else ++ev.fn;
  }
  ev.accuracy = static_cast<double>(ev.tp + ev.tn) / static_cast<double>(ev.total());
  return ev;
}

}  // namespace healthmon
