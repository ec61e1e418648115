#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tiso/dataset.hpp"

namespace tiso {

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Per class, round(train_fraction * class size) shuffled members go to
/// train and the rest to test. Both sides are sorted.
SplitIndices stratified_split(const std::vector<int>& labels, double train_fraction,
                              std::uint64_t seed);

struct ClassifierConfig {
  double learning_rate = 1.0;
  std::size_t epochs = 500;
  double weight_decay = 1e-4;
  /// Centre and scale columns with training-set statistics before fitting.
  /// Off by default: it blows rare colours up to unit variance.
  bool standardize = false;
};

/// Binary logistic regression fitted by full-batch gradient descent with L2
/// weight decay on the weights (not the bias).
class LogisticRegression {
 public:
  explicit LogisticRegression(ClassifierConfig config = {}) : config_(config) {}

  /// Fits on the rows of x listed in `rows`. Labels must be 0 or 1.
  void fit(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
           const std::vector<std::size_t>& rows);
  double probability(const std::vector<double>& row) const;
  int predict(const std::vector<double>& row) const { return probability(row) >= 0.5; }

  const std::vector<double>& weights() const noexcept { return w_; }
  double bias() const noexcept { return b_; }

 private:
  std::vector<double> scaled(const std::vector<double>& row) const;

  ClassifierConfig config_;
  std::vector<double> mean_, scale_, w_;
  double b_ = 0.0;
};

struct ExperimentReport {
  std::vector<double> accuracies;  // one per run
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;
  std::size_t runs = 0;
  /// All feature rows identical: no classifier can beat the majority rate.
  bool degenerate = false;
};

/// Repeats `runs` stratified splits of one dataset; run r uses seed
/// mix_seed(seed ^ r). std_accuracy is the population deviation.
ExperimentReport train_eval(const FeatureMatrix& features, const std::vector<int>& labels,
                            double train_fraction, std::size_t runs, std::uint64_t seed,
                            ClassifierConfig config = {});

}  // namespace tiso
