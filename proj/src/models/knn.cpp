#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "engines.hpp"

namespace vlmcast::detail {

namespace {

class KnnRegressor final : public Regressor {
public:
  KnnRegressor(Eigen::MatrixXd inputs, Eigen::VectorXd targets, std::size_t k)
      : inputs_(std::move(inputs)), targets_(std::move(targets)), k_(k) {}

  double predict(const Eigen::VectorXd& window) const override {
    const auto n = static_cast<std::size_t>(inputs_.rows());
    std::vector<std::pair<double, std::size_t>> dist(n);
    for (std::size_t i = 0; i < n; ++i)
      dist[i] = {(inputs_.row(static_cast<Eigen::Index>(i)).transpose() - window)
                     .norm(),
                 i};
    const std::size_t k = std::min(k_, n);
    std::partial_sort(dist.begin(), dist.begin() + static_cast<long>(k),
                      dist.end()); // ties break on the stored index
    // exact hits dominate: average their targets
    if (dist[0].first == 0.0) {
      double sum = 0.0;
      std::size_t cnt = 0;
      for (const auto& [d, i] : dist) {
        if (d > 0.0) break;
        sum += targets_(static_cast<Eigen::Index>(i));
        ++cnt;
      }
      return sum / static_cast<double>(cnt);
    }
    double wsum = 0.0, acc = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const double w = 1.0 / dist[j].first;
      wsum += w;
      acc += w * targets_(static_cast<Eigen::Index>(dist[j].second));
    }
    return acc / wsum;
  }

private:
  Eigen::MatrixXd inputs_;
  Eigen::VectorXd targets_;
  std::size_t k_;
};

} // namespace

FittedModel fit_knn(const ModelSpec& spec, const WindowedDataset& data) {
  const ParamReader p(spec.params, {"k"});
  const auto k = static_cast<std::size_t>(p.number("k", 5));
  if (k < 1) throw std::invalid_argument("knn: k must be >= 1");
  FittedModel m;
  m.spec = spec;
  m.engine = std::make_shared<KnnRegressor>(data.inputs, data.targets, k);
  m.train_residual = 0.0; // memorizing engine
  return m;
}

} // namespace vlmcast::detail
