#include "tiso/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "tiso/errors.hpp"
#include "tiso/random.hpp"

namespace tiso {

SplitIndices stratified_split(const std::vector<int>& labels, double train_fraction,
                              std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train fraction must lie in (0, 1)");
  }
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

  Rng rng(seed);
  SplitIndices split;
  for (auto& [label, members] : by_class) {
    rng.shuffle(members);
    auto n_train = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(members.size())));
    split.train.insert(split.train.end(), members.begin(), members.begin() + n_train);
    split.test.insert(split.test.end(), members.begin() + n_train, members.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

void LogisticRegression::fit(const std::vector<std::vector<double>>& x,
                             const std::vector<int>& y,
                             const std::vector<std::size_t>& rows) {
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "no training rows");
  const std::size_t d = x[rows.front()].size();
  const double n = static_cast<double>(rows.size());

  mean_.assign(d, 0.0);
  scale_.assign(d, 1.0);
  if (config_.standardize) {
    for (auto r : rows) {
      for (std::size_t j = 0; j < d; ++j) mean_[j] += x[r][j];
    }
    for (auto& m : mean_) m /= n;
    std::vector<double> var(d, 0.0);
    for (auto r : rows) {
      for (std::size_t j = 0; j < d; ++j) {
        const double c = x[r][j] - mean_[j];
        var[j] += c * c;
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      const double sd = std::sqrt(var[j] / n);
      scale_[j] = sd > 1e-12 ? 1.0 / sd : 0.0;
    }
  }

  // Sparse copy of the scaled rows; unstandardised WL features are mostly zero.
  std::vector<std::vector<std::pair<std::size_t, double>>> z;
  z.reserve(rows.size());
  for (auto r : rows) {
    auto dense = scaled(x[r]);
    auto& sparse = z.emplace_back();
    for (std::size_t j = 0; j < d; ++j) {
      if (dense[j] != 0.0) sparse.emplace_back(j, dense[j]);
    }
  }

  w_.assign(d, 0.0);
  b_ = 0.0;
  std::vector<double> grad(d);
  for (std::size_t epoch = 0; epoch < config_.epochs; ++epoch) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_b = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      double s = b_;
      for (auto [j, v] : z[i]) s += w_[j] * v;
      const double err = sigmoid(s) - static_cast<double>(y[rows[i]]);
      for (auto [j, v] : z[i]) grad[j] += err * v;
      grad_b += err;
    }
    for (std::size_t j = 0; j < d; ++j) {
      w_[j] -= config_.learning_rate * (grad[j] / n + config_.weight_decay * w_[j]);
    }
    b_ -= config_.learning_rate * grad_b / n;
  }
}

std::vector<double> LogisticRegression::scaled(const std::vector<double>& row) const {
  std::vector<double> out(mean_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = (row[j] - mean_[j]) * scale_[j];
  return out;
}

double LogisticRegression::probability(const std::vector<double>& row) const {
  double s = b_;
  for (std::size_t j = 0; j < w_.size(); ++j) s += w_[j] * (row[j] - mean_[j]) * scale_[j];
  return sigmoid(s);
}

ExperimentReport train_eval(const FeatureMatrix& features, const std::vector<int>& labels,
                            double train_fraction, std::size_t runs, std::uint64_t seed,
                            ClassifierConfig config) {
  if (features.rows.size() != labels.size()) {
    throw Error(ErrorCode::kInvalidArgument, "feature and label counts differ");
  }
  if (runs == 0) throw Error(ErrorCode::kInvalidArgument, "runs must be positive");

  ExperimentReport report;
  report.runs = runs;
  report.degenerate = std::all_of(features.rows.begin(), features.rows.end(),
                                  [&](const auto& r) { return r == features.rows.front(); });

  for (std::size_t r = 0; r < runs; ++r) {
    auto split = stratified_split(labels, train_fraction, mix_seed(seed ^ r));
    LogisticRegression model(config);
    model.fit(features.rows, labels, split.train);
    std::size_t correct = 0;
    for (auto i : split.test) correct += model.predict(features.rows[i]) == labels[i];
    report.accuracies.push_back(split.test.empty() ? 0.0
                                                   : static_cast<double>(correct) /
                                                         static_cast<double>(split.test.size()));
  }
  double sum = 0.0;
  for (auto a : report.accuracies) sum += a;
  report.mean_accuracy = sum / static_cast<double>(runs);
  double sq = 0.0;
  for (auto a : report.accuracies) sq += (a - report.mean_accuracy) * (a - report.mean_accuracy);
  report.std_accuracy = std::sqrt(sq / static_cast<double>(runs));
  return report;
}

}  // namespace tiso
