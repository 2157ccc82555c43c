#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlmcast/forecast.hpp"

namespace vlmcast {

namespace {

double median_step(const std::vector<Epoch>& epochs) {
  std::vector<double> deltas;
  deltas.reserve(epochs.size());
  for (std::size_t i = 1; i < epochs.size(); ++i)
    deltas.push_back(epochs[i] - epochs[i - 1]);
  if (deltas.empty()) return kDailyStep;
  std::nth_element(deltas.begin(), deltas.begin() + static_cast<long>(deltas.size() / 2),
                   deltas.end());
  return deltas[deltas.size() / 2];
}

} // namespace

WindowedDataset build_windows(const CenteredSeries& s, std::size_t w,
                              std::size_t n_train) {
  const auto& base = s.base();
  if (w < 1) throw std::domain_error("build_windows: window length must be >= 1");
  if (n_train < w + 1)
    throw std::domain_error("build_windows: n_train must be at least w + 1");
  if (base.size() < n_train)
    throw std::domain_error("build_windows: series shorter than n_train");

  const double step = median_step(base.epochs());
  const double t0 = base.epochs().front();

  // index of each sample on the expected regular grid
  std::vector<long long> grid(n_train);
  for (std::size_t i = 0; i < n_train; ++i)
    grid[i] = std::llround((base.epochs()[i] - t0) / step);

  WindowedDataset out;
  out.window_length = w;
  out.n_train = n_train;
  out.training_mean = s.training_mean();
  out.train_epochs.assign(base.epochs().begin(),
                          base.epochs().begin() + static_cast<long>(n_train));
  out.train_values.assign(base.values().begin(),
                          base.values().begin() + static_cast<long>(n_train));

  std::vector<std::size_t> targets;
  for (std::size_t i = w; i < n_train; ++i) {
    bool contiguous = true;
    for (std::size_t j = 0; j <= w; ++j) {
      if (grid[i - j] != grid[i] - static_cast<long long>(j)) {
        contiguous = false;
        break;
      }
    }
    if (contiguous)
      targets.push_back(i);
    else
      ++out.skipped_pairs;
  }

  out.inputs.resize(static_cast<Eigen::Index>(targets.size()),
                    static_cast<Eigen::Index>(w));
  out.targets.resize(static_cast<Eigen::Index>(targets.size()));
  for (std::size_t r = 0; r < targets.size(); ++r) {
    const std::size_t i = targets[r];
    for (std::size_t j = 0; j < w; ++j)
      out.inputs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
          base.values()[i - w + j];
    out.targets(static_cast<Eigen::Index>(r)) = base.values()[i];
  }
  return out;
}

} // namespace vlmcast
