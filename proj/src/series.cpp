#include "vlmcast/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vlmcast {

ScalarSeries::ScalarSeries(std::vector<Epoch> epochs, std::vector<double> values)
    : epochs_(std::move(epochs)), values_(std::move(values)) {
  if (epochs_.size() != values_.size())
    throw std::domain_error("ScalarSeries: epoch/value length mismatch");
  for (std::size_t i = 0; i < epochs_.size(); ++i) {
    if (!std::isfinite(epochs_[i]) || !std::isfinite(values_[i]))
      throw std::domain_error("ScalarSeries: non-finite entry");
    if (i > 0 && epochs_[i] <= epochs_[i - 1])
      throw std::domain_error("ScalarSeries: epochs not strictly increasing");
  }
}

PositionSeries::PositionSeries(std::string station_id,
                               std::vector<Sample> samples,
                               double nominal_step, bool check_station_norm)
    : station_id_(std::move(station_id)), samples_(std::move(samples)),
      nominal_step_(nominal_step) {
  if (nominal_step_ <= 0.0)
    throw std::domain_error("PositionSeries: nominal step must be positive");
  std::vector<Epoch> epochs;
  epochs.reserve(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& [t, p] = samples_[i];
    if (!std::isfinite(t) || !std::isfinite(p.x) || !std::isfinite(p.y) ||
        !std::isfinite(p.z))
      throw std::domain_error("PositionSeries: non-finite sample");
    if (i > 0 && t <= samples_[i - 1].first)
      throw std::domain_error("PositionSeries: epochs not strictly increasing");
    if (check_station_norm && p.norm() <= kMinStationRadius)
      throw std::domain_error("PositionSeries: ECEF norm below ground-station gate");
    epochs.push_back(t);
  }
  if (!epochs.empty()) gap_mask_ = detect_gaps(epochs, nominal_step_);
}

std::size_t PositionSeries::gap_count() const {
  return static_cast<std::size_t>(
      std::count(gap_mask_.begin(), gap_mask_.end(), true));
}

ScalarSeries PositionSeries::component(int axis) const {
  if (axis < 0 || axis > 2)
    throw std::domain_error("PositionSeries: component axis must be 0, 1 or 2");
  std::vector<Epoch> epochs;
  std::vector<double> values;
  epochs.reserve(samples_.size());
  values.reserve(samples_.size());
  for (const auto& [t, p] : samples_) {
    epochs.push_back(t);
    values.push_back(axis == 0 ? p.x : axis == 1 ? p.y : p.z);
  }
  return ScalarSeries(std::move(epochs), std::move(values));
}

CenteredSeries center_on_training_mean(const ScalarSeries& s, std::size_t n) {
  if (n < 1 || n > s.size())
    throw std::domain_error("center_on_training_mean: n out of range");
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    mean += (s.values()[i] - mean) / static_cast<double>(i + 1);
  std::vector<double> centered(s.values());
  for (double& v : centered) v -= mean;
  return CenteredSeries(ScalarSeries(s.epochs(), std::move(centered)), mean, n);
}

ScalarSeries uncenter(const CenteredSeries& c) {
  std::vector<double> values(c.base().values());
  for (double& v : values) v += c.training_mean();
  return ScalarSeries(c.base().epochs(), std::move(values));
}

std::vector<bool> detect_gaps(const std::vector<Epoch>& epochs,
                              double nominal_step, double tolerance_fraction) {
  if (nominal_step <= 0.0)
    throw std::domain_error("detect_gaps: nominal step must be positive");
  if (!std::is_sorted(epochs.begin(), epochs.end()))
    throw std::domain_error("detect_gaps: samples not sorted");
  if (epochs.empty()) return {};

  const double span = epochs.back() - epochs.front();
  const auto expected =
      static_cast<std::size_t>(std::llround(span / nominal_step)) + 1;
  const double tol = tolerance_fraction * nominal_step;

  std::vector<bool> mask(expected, true);
  std::size_t j = 0;
  for (std::size_t k = 0; k < expected; ++k) {
    const double target = epochs.front() + static_cast<double>(k) * nominal_step;
    while (j + 1 < epochs.size() &&
           std::abs(epochs[j + 1] - target) <= std::abs(epochs[j] - target))
      ++j;
    if (std::abs(epochs[j] - target) <= tol) mask[k] = false;
  }
  return mask;
}

} // namespace vlmcast
