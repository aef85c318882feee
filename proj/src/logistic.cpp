#include "pivot/logistic.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pivot/rng.h"

namespace pivot {

BowVector bow_features(const Sentence& sentence, bool binary) {
  BowVector features;
  for (const Token& t : sentence.tokens) {
    if (binary) {
      features[t] = 1;
    } else {
      features[t] += 1;
    }
  }
  return features;
}

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

double dot(const LogisticModel& model, const BowVector& features) {
  double z = model.bias;
  for (const auto& [token, count] : features) {
    const auto it = model.weights.find(token);
    if (it != model.weights.end()) {
      z += it->second * static_cast<double>(count);
    }
  }
  return z;
}

// Numerically stable cross-entropy: log(1 + e^z) - y*z without overflow.
double cross_entropy(double z, int y) {
  const double softplus = std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z)));
  return softplus - static_cast<double>(y) * z;
}

}  // namespace

LogisticModel train_logistic(const Corpus& corpus, const LogisticOptions& options,
                             std::uint64_t seed) {
  if (!corpus.balanced) {
    throw std::invalid_argument("logistic training requires a balanced corpus");
  }
  if (corpus.sentences.empty()) {
    throw std::invalid_argument("cannot train on an empty corpus");
  }
  if (options.epochs < 1) {
    throw std::invalid_argument("epochs must be >= 1");
  }
  if (!(options.step > 0.0)) {
    throw std::invalid_argument("step size must be positive");
  }
  if (options.l2 < 0.0) {
    throw std::invalid_argument("l2 must be nonnegative");
  }

  std::vector<BowVector> features;
  features.reserve(corpus.sentences.size());
  for (const Sentence& s : corpus.sentences) {
    features.push_back(bow_features(s, options.binary_features));
  }

  LogisticModel model;
  model.l2 = options.l2;
  model.binary_features = options.binary_features;

  Rng rng(seed);
  std::vector<std::size_t> order(corpus.sentences.size());
  std::iota(order.begin(), order.end(), 0);

  for (std::size_t epoch = 1; epoch <= options.epochs; ++epoch) {
    const double lr = options.step / std::sqrt(static_cast<double>(epoch));
    rng.shuffle(order);
    for (const std::size_t idx : order) {
      const double z = dot(model, features[idx]);
      const double g = sigmoid(z) - static_cast<double>(corpus.sentences[idx].label);
      for (const auto& [token, count] : features[idx]) {
        double& w = model.weights[token];
        w -= lr * (g * static_cast<double>(count) + options.l2 * w);
      }
      model.bias -= lr * g;
    }
    const double loss = mean_loss(model, corpus);
    if (!std::isfinite(loss)) {
      throw std::runtime_error(
          "training diverged: non-finite loss at epoch " + std::to_string(epoch) +
          " (step " + std::to_string(options.step) + ", l2 " +
          std::to_string(options.l2) + "); lower the step size");
    }
    model.train_log.emplace_back(epoch, loss);
  }
  return model;
}

std::pair<int, double> predict(const LogisticModel& model, const Sentence& sentence) {
  const double z = dot(model, bow_features(sentence, model.binary_features));
  const double p = sigmoid(z);
  return {p > 0.5 ? 1 : 0, p};
}

double mean_loss(const LogisticModel& model, const Corpus& corpus) {
  double total = 0.0;
  for (const Sentence& s : corpus.sentences) {
    const double z = dot(model, bow_features(s, model.binary_features));
    total += cross_entropy(z, s.label);
  }
  double reg = 0.0;
  for (const auto& [token, w] : model.weights) reg += w * w;
  return total / static_cast<double>(corpus.sentences.size()) + 0.5 * model.l2 * reg;
}

void loss_gradient(const LogisticModel& model, const Corpus& corpus,
                   std::map<Token, double>* grad_w, double* grad_b) {
  grad_w->clear();
  *grad_b = 0.0;
  const double n = static_cast<double>(corpus.sentences.size());
  for (const Sentence& s : corpus.sentences) {
    const BowVector features = bow_features(s, model.binary_features);
    const double g = sigmoid(dot(model, features)) - static_cast<double>(s.label);
    for (const auto& [token, count] : features) {
      (*grad_w)[token] += g * static_cast<double>(count) / n;
    }
    *grad_b += g / n;
  }
  for (const auto& [token, w] : model.weights) {
    (*grad_w)[token] += model.l2 * w;
  }
}

EvalReport evaluate_logistic(const LogisticModel& model, const Corpus& corpus) {
  if (corpus.sentences.empty()) {
    throw std::invalid_argument("cannot evaluate on an empty corpus");
  }
  std::size_t correct = 0;
  std::size_t exact_half = 0;
  std::array<std::size_t, 2> true_pos{0, 0};
  std::array<std::size_t, 2> predicted_count{0, 0};
  for (const Sentence& s : corpus.sentences) {
    const auto [label, p] = predict(model, s);
    const auto yi = static_cast<std::size_t>(label);
    predicted_count[yi] += 1;
    if (label == s.label) {
      correct += 1;
      true_pos[yi] += 1;
    }
    if (p == 0.5) exact_half += 1;
  }
  EvalReport report;
  report.n = corpus.sentences.size();
  report.accuracy = static_cast<double>(correct) / static_cast<double>(report.n);
  report.tie_rate = static_cast<double>(exact_half) / static_cast<double>(report.n);
  for (int y : {0, 1}) {
    const auto yi = static_cast<std::size_t>(y);
    report.precision[yi] =
        predicted_count[yi] == 0
            ? 0.0
            : static_cast<double>(true_pos[yi]) / static_cast<double>(predicted_count[yi]);
    report.recall[yi] = corpus.class_sizes[yi] == 0
                            ? 0.0
                            : static_cast<double>(true_pos[yi]) /
                                  static_cast<double>(corpus.class_sizes[yi]);
  }
  return report;
}

}  // namespace pivot
