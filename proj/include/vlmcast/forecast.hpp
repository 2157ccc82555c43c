#ifndef VLMCAST_FORECAST_HPP
#define VLMCAST_FORECAST_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vlmcast/series.hpp"

namespace vlmcast {

/// Sliding-window training set: row i of inputs holds the w values
/// immediately preceding targets[i]. Windows that would cross a gap in the
/// expected epoch grid are dropped and counted. The raw training prefix is
/// kept for engines that fit on the series itself.
struct WindowedDataset {
  std::size_t window_length = 0;
  std::size_t n_train = 0;
  Eigen::MatrixXd inputs;  ///< pairs x window_length
  Eigen::VectorXd targets;
  std::size_t skipped_pairs = 0;
  double training_mean = 0.0; ///< mean removed from the centered series
  std::vector<Epoch> train_epochs;
  std::vector<double> train_values; ///< centered
};

/// Throws std::domain_error when the series is shorter than n_train or when
/// n_train < w + 1. The expected epoch grid is inferred from the median
/// positive epoch spacing.
WindowedDataset build_windows(const CenteredSeries& s, std::size_t w,
                              std::size_t n_train);

enum class ModelKind { Mlp, Bnn, Rbf, Gp, Knn, Grnn, Cart, Svr, Theta };

ModelKind model_kind_from_string(const std::string& name);
std::string to_string(ModelKind kind);

/// Engine selection plus hyperparameters. Unknown keys are rejected at fit
/// time; every kind has a complete documented default set (see README).
/// All randomness any engine uses flows from `seed` through one
/// std::mt19937_64 generator.
struct ModelSpec {
  ModelKind kind = ModelKind::Gp;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
};

/// Trained regressor: maps a window of w centered values to the next one.
class Regressor {
public:
  virtual ~Regressor() = default;
  virtual double predict(const Eigen::VectorXd& window) const = 0;
};

/// Immutable result of fit(); safe to share across prediction threads.
struct FittedModel {
  ModelSpec spec;
  std::shared_ptr<const Regressor> engine;
  std::vector<double> loss_curve;  ///< iterative engines
  double train_residual = 0.0;     ///< closed-form engines: rms residual
};

/// Train one engine on a windowed dataset. Throws ConditioningError for
/// singular kernel systems, ConvergenceError when iterative training fails,
/// std::invalid_argument for unknown hyperparameter keys.
FittedModel fit(const ModelSpec& spec, const WindowedDataset& data);

enum class ForecastMode { Recursive, RollingActuals };
enum class Motion { Subsidence, Upheave, Indeterminate };

std::string to_string(ForecastMode mode);
std::string to_string(Motion m);

/// Sign of the least-squares slope through the predictions; magnitudes
/// below slope_floor [m/yr] give Indeterminate. Needs at least 2 points.
Motion classify_motion(const ScalarSeries& predictions,
                       double slope_floor = 1e-4);

struct ForecastRun {
  std::size_t horizon = 0;
  ForecastMode mode = ForecastMode::Recursive;
  ScalarSeries predictions; ///< absolute meters (centering undone)
  Motion classification = Motion::Indeterminate;
  double trend_slope = 0.0; ///< least-squares slope of the predictions [m/yr]
};

/// Multi-step prediction. Recursive mode feeds each prediction back into
/// the window; rolling-actuals substitutes the true (centered) value after
/// each step, which makes every prediction one-step-ahead. `actuals` are
/// the centered true values for the q evaluation epochs and are required
/// only in rolling mode.
ForecastRun predict_recursive(const FittedModel& model,
                              const std::vector<double>& seed_window,
                              std::size_t q, double training_mean,
                              const std::vector<Epoch>& prediction_epochs,
                              ForecastMode mode = ForecastMode::Recursive,
                              const std::vector<double>& actuals = {},
                              double slope_floor = 1e-4);

/// Two-line Theta forecast fitted on the first n_train samples of s: the
/// trend line extrapolated linearly, the theta=2 line extrapolated by
/// simple exponential smoothing (alpha by SSE grid search over
/// 0.01..1.00) plus its own least-squares drift, combined with equal
/// weights.
ForecastRun theta_forecast(const ScalarSeries& s, std::size_t n_train,
                           std::size_t q, double slope_floor = 1e-4);

/// SSE-optimal smoothing parameter over the documented grid, exposed for
/// verification.
double ses_grid_search_alpha(const std::vector<double>& values);

} // namespace vlmcast

#endif
