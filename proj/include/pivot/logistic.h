#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pivot/classifier.h"
#include "pivot/corpus.h"

namespace pivot {

// Sparse term-frequency features. Ordered map so weight updates and dot
// products are applied in a fixed token order, keeping training bit-for-bit
// reproducible.
using BowVector = std::map<Token, std::uint32_t>;

BowVector bow_features(const Sentence& sentence, bool binary);

struct LogisticOptions {
  std::size_t epochs = 10;
  double step = 0.1;  // decayed as step / sqrt(epoch)
  double l2 = 1e-4;
  bool binary_features = false;
};

struct LogisticModel {
  std::map<Token, double> weights;
  double bias = 0.0;
  double l2 = 0.0;
  bool binary_features = false;
  std::vector<std::pair<std::size_t, double>> train_log;  // (epoch, mean loss)
};

double sigmoid(double z);

// Seeded SGD on the regularized mean negative log-likelihood
//   J = (1/n) sum_i ce_i + (l2/2) ||w||^2      (bias unregularized),
// with per-epoch shuffling and step decay. Deterministic given the seed.
// Throws if the loss turns non-finite (step too large), with diagnostics.
LogisticModel train_logistic(const Corpus& corpus, const LogisticOptions& options,
                             std::uint64_t seed);

// (class, probability of class 1). Out-of-vocabulary tokens contribute
// nothing. Class 1 iff probability > 0.5; an exact 0.5 resolves to class 0.
std::pair<int, double> predict(const LogisticModel& model, const Sentence& sentence);

// The objective J above, evaluated on the whole corpus.
double mean_loss(const LogisticModel& model, const Corpus& corpus);

// Full-batch analytic gradient of J with respect to every weight in the model
// and the bias.
void loss_gradient(const LogisticModel& model, const Corpus& corpus,
                   std::map<Token, double>* grad_w, double* grad_b);

// Accuracy and per-class precision/recall of the model on a corpus; tie_rate
// is the fraction of sentences with probability exactly 0.5.
EvalReport evaluate_logistic(const LogisticModel& model, const Corpus& corpus);

}  // namespace pivot
