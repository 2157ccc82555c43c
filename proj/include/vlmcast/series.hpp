#ifndef VLMCAST_SERIES_HPP
#define VLMCAST_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vlmcast/constants.hpp"

namespace vlmcast {

/// Continuous time coordinate, decimal sidereal years.
using Epoch = double;

/// Earth-centered Earth-fixed position [m].
struct EcefCoord {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

enum class FrameTag { LocalGeodetic, LocalAstronomical };

/// Position in a topocentric frame [m]; the tag is fixed at construction.
struct LocalCoord {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  FrameTag frame = FrameTag::LocalGeodetic;

  double norm() const { return std::sqrt(e1 * e1 + e2 * e2 + e3 * e3); }
};

/// Scalar coordinate samples on strictly increasing epochs.
class ScalarSeries {
public:
  ScalarSeries() = default;

  /// Throws std::domain_error on length mismatch, non-finite entries or
  /// non-increasing epochs.
  ScalarSeries(std::vector<Epoch> epochs, std::vector<double> values);

  const std::vector<Epoch>& epochs() const noexcept { return epochs_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

private:
  std::vector<Epoch> epochs_;
  std::vector<double> values_;
};

/// A series with the mean of its training prefix removed; keeps the mean so
/// absolute values can be restored.
class CenteredSeries {
public:
  CenteredSeries() = default;
  CenteredSeries(ScalarSeries base, double training_mean, std::size_t n_train)
      : base_(std::move(base)), training_mean_(training_mean),
        n_train_(n_train) {}

  const ScalarSeries& base() const noexcept { return base_; }
  double training_mean() const noexcept { return training_mean_; }
  std::size_t n_train() const noexcept { return n_train_; }

private:
  ScalarSeries base_;
  double training_mean_ = 0.0;
  std::size_t n_train_ = 0;
};

/// Raw station record: epoch-stamped ECEF triplets plus a presence mask on
/// the expected regular epoch grid.
class PositionSeries {
public:
  using Sample = std::pair<Epoch, EcefCoord>;

  PositionSeries() = default;

  /// Samples must be sorted by epoch with no duplicates. The gap mask is
  /// derived from the nominal step. With check_station_norm set, every
  /// sample must satisfy the ground-station radius gate.
  PositionSeries(std::string station_id, std::vector<Sample> samples,
                 double nominal_step = kDailyStep,
                 bool check_station_norm = true);

  const std::string& station_id() const noexcept { return station_id_; }
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  const std::vector<bool>& gap_mask() const noexcept { return gap_mask_; }
  double nominal_step() const noexcept { return nominal_step_; }
  std::size_t size() const noexcept { return samples_.size(); }

  std::size_t gap_count() const;
  std::size_t expected_epoch_count() const noexcept {
    return gap_mask_.size();
  }

  /// Extract one ECEF component (0=x, 1=y, 2=z) as a scalar series.
  ScalarSeries component(int axis) const;

private:
  std::string station_id_;
  std::vector<Sample> samples_;
  std::vector<bool> gap_mask_;
  double nominal_step_ = kDailyStep;
};

/// Subtract the mean of the first n values from the whole series.
/// Throws std::domain_error unless 1 <= n <= s.size().
CenteredSeries center_on_training_mean(const ScalarSeries& s, std::size_t n);

/// Restore absolute values; exact inverse of center_on_training_mean.
ScalarSeries uncenter(const CenteredSeries& c);

/// Flag every expected epoch (start + k*step) with no sample within
/// tolerance_fraction*step. Throws std::domain_error on unsorted samples or
/// non-positive step.
std::vector<bool> detect_gaps(const std::vector<Epoch>& epochs,
                              double nominal_step,
                              double tolerance_fraction = 0.5);

} // namespace vlmcast

#endif
