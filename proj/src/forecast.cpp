#include "vlmcast/forecast.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "models/engines.hpp"

namespace vlmcast {

namespace detail {

ParamReader::ParamReader(const std::map<std::string, std::string>& params,
                         std::initializer_list<const char*> allowed)
    : params_(params) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return key == k;
        }) == allowed.end())
      throw std::invalid_argument("unknown hyperparameter key '" + key + "'");
  }
}

double ParamReader::number(const std::string& key, double dflt) const {
  const auto it = params_.find(key);
  if (it == params_.end()) return dflt;
  std::size_t pos = 0;
  const double v = std::stod(it->second, &pos);
  if (pos != it->second.size())
    throw std::invalid_argument("hyperparameter '" + key +
                                "' is not a number: " + it->second);
  return v;
}

std::string ParamReader::text(const std::string& key,
                              const std::string& dflt) const {
  const auto it = params_.find(key);
  return it == params_.end() ? dflt : it->second;
}

bool ParamReader::has(const std::string& key) const {
  return params_.count(key) > 0;
}

} // namespace detail

ModelKind model_kind_from_string(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(c)));
  if (up == "MLP") return ModelKind::Mlp;
  if (up == "BNN") return ModelKind::Bnn;
  if (up == "RBF") return ModelKind::Rbf;
  if (up == "GP") return ModelKind::Gp;
  if (up == "KNN") return ModelKind::Knn;
  if (up == "GRNN") return ModelKind::Grnn;
  if (up == "CART") return ModelKind::Cart;
  if (up == "SVR") return ModelKind::Svr;
  if (up == "THETA") return ModelKind::Theta;
  throw std::invalid_argument("unknown model kind '" + name + "'");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
  case ModelKind::Mlp: return "MLP";
  case ModelKind::Bnn: return "BNN";
  case ModelKind::Rbf: return "RBF";
  case ModelKind::Gp: return "GP";
  case ModelKind::Knn: return "KNN";
  case ModelKind::Grnn: return "GRNN";
  case ModelKind::Cart: return "CART";
  case ModelKind::Svr: return "SVR";
  case ModelKind::Theta: return "THETA";
  }
  return "?";
}

std::string to_string(ForecastMode mode) {
  return mode == ForecastMode::Recursive ? "recursive" : "rolling_actuals";
}

std::string to_string(Motion m) {
  switch (m) {
  case Motion::Subsidence: return "subsidence";
  case Motion::Upheave: return "upheave";
  case Motion::Indeterminate: return "indeterminate";
  }
  return "?";
}

FittedModel fit(const ModelSpec& spec, const WindowedDataset& data) {
  if (data.targets.size() == 0 && spec.kind != ModelKind::Theta)
    throw std::domain_error("fit: empty windowed dataset");
  switch (spec.kind) {
  case ModelKind::Knn: return detail::fit_knn(spec, data);
  case ModelKind::Grnn: return detail::fit_grnn(spec, data);
  case ModelKind::Cart: return detail::fit_cart(spec, data);
  case ModelKind::Gp: return detail::fit_gp(spec, data);
  case ModelKind::Rbf: return detail::fit_rbf(spec, data);
  case ModelKind::Mlp:
  case ModelKind::Bnn: return detail::fit_mlp(spec, data);
  case ModelKind::Svr: return detail::fit_svr(spec, data);
  case ModelKind::Theta: return detail::fit_theta_engine(spec, data);
  }
  throw std::logic_error("fit: unreachable");
}

namespace {

double ls_slope(const ScalarSeries& s) {
  const auto n = s.size();
  double tm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    tm += s.epochs()[i];
    ym += s.values()[i];
  }
  tm /= static_cast<double>(n);
  ym /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (s.epochs()[i] - tm) * (s.values()[i] - ym);
    sxx += (s.epochs()[i] - tm) * (s.epochs()[i] - tm);
  }
  if (sxx == 0.0) return 0.0;
  return sxy / sxx;
}

} // namespace

Motion classify_motion(const ScalarSeries& predictions, double slope_floor) {
  if (predictions.size() < 2)
    throw std::domain_error("classify_motion: need at least 2 predictions");
  const double slope = ls_slope(predictions);
  if (std::abs(slope) < slope_floor) return Motion::Indeterminate;
  return slope < 0.0 ? Motion::Subsidence : Motion::Upheave;
}

ForecastRun predict_recursive(const FittedModel& model,
                              const std::vector<double>& seed_window,
                              std::size_t q, double training_mean,
                              const std::vector<Epoch>& prediction_epochs,
                              ForecastMode mode,
                              const std::vector<double>& actuals,
                              double slope_floor) {
  if (q < 1) throw std::domain_error("predict_recursive: q must be >= 1");
  if (prediction_epochs.size() != q)
    throw std::domain_error("predict_recursive: need q prediction epochs");
  if (mode == ForecastMode::RollingActuals && actuals.size() != q)
    throw std::domain_error("predict_recursive: rolling mode needs q actuals");

  Eigen::VectorXd window(static_cast<Eigen::Index>(seed_window.size()));
  for (std::size_t i = 0; i < seed_window.size(); ++i)
    window(static_cast<Eigen::Index>(i)) = seed_window[i];

  std::vector<double> preds(q);
  for (std::size_t k = 0; k < q; ++k) {
    const double yhat = model.engine->predict(window);
    preds[k] = yhat + training_mean;
    const double feed =
        (mode == ForecastMode::RollingActuals) ? actuals[k] : yhat;
    if (window.size() > 1) {
      for (Eigen::Index i = 0; i + 1 < window.size(); ++i)
        window(i) = window(i + 1);
    }
    window(window.size() - 1) = feed;
  }

  ForecastRun run;
  run.horizon = q;
  run.mode = mode;
  run.predictions = ScalarSeries(prediction_epochs, std::move(preds));
  run.trend_slope = ls_slope(run.predictions);
  run.classification =
      q >= 2 ? classify_motion(run.predictions, slope_floor)
             : Motion::Indeterminate;
  return run;
}

} // namespace vlmcast
