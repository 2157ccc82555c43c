#include "vlmcast/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "vlmcast/errors.hpp"

namespace vlmcast {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

FrequencyTable FrequencyTable::from_periods_days(std::vector<double> periods) {
  if (periods.empty())
    throw std::domain_error("FrequencyTable: empty period list");
  std::sort(periods.begin(), periods.end());
  for (double p : periods)
    if (!(p > 0.0)) throw std::domain_error("FrequencyTable: period must be positive");
  FrequencyTable t;
  t.periods_days = std::move(periods);
  t.frequencies.reserve(t.periods_days.size());
  for (double p : t.periods_days)
    t.frequencies.push_back(kDaysPerSiderealYear / p);
  return t;
}

FrequencyTable default_frequency_table() {
  return FrequencyTable::from_periods_days({0.5, 1.0, 14.0, 30.0, 180.1, 359.5});
}

TrendLine fit_trend_line(const ScalarSeries& s) {
  const auto n = s.size();
  if (n < 2) throw std::domain_error("fit_trend_line: need at least 2 samples");
  const double t0 = s.epochs().front();
  if (s.epochs().back() == t0)
    throw ConditioningError("fit_trend_line: all epochs identical");

  // shift epochs to the first one; improves conditioning without changing
  // the fitted line
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    design(static_cast<Eigen::Index>(i), 0) = s.epochs()[i] - t0;
    design(static_cast<Eigen::Index>(i), 1) = 1.0;
    rhs(static_cast<Eigen::Index>(i)) = s.values()[i];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::Vector2d sol = svd.solve(rhs);
  return TrendLine{sol(0), sol(1) - sol(0) * t0};
}

ScalarSeries detrend(const ScalarSeries& s, const TrendLine& line) {
  std::vector<double> values(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    values[i] = s.values()[i] - line.evaluate(s.epochs()[i]);
  return ScalarSeries(s.epochs(), std::move(values));
}

HarmonicFit fit_harmonics(const ScalarSeries& detrended,
                          const FrequencyTable& freqs) {
  const auto n = detrended.size();
  const auto m = freqs.size();
  if (m == 0) throw std::domain_error("fit_harmonics: empty frequency table");
  if (n < 2 * m)
    throw std::domain_error("fit_harmonics: need at least 2m samples");

  const double t0 = detrended.epochs().front();
  Eigen::MatrixXd design(n, 2 * m);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = detrended.epochs()[i] - t0;
    for (std::size_t j = 0; j < m; ++j) {
      const double arg = kTwoPi * freqs.frequencies[j] * t;
      design(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(2 * j)) =
          std::cos(arg);
      design(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(2 * j + 1)) =
          std::sin(arg);
    }
    rhs(static_cast<Eigen::Index>(i)) = detrended.values()[i];
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (!(smin > smax * 1e-13))
    throw ConditioningError("fit_harmonics: rank-deficient design matrix");
  const Eigen::VectorXd sol = svd.solve(rhs);

  // the fit is done in shifted time; fold the phase shift back so the
  // coefficients refer to absolute epochs
  HarmonicFit fit;
  fit.condition_number = smax / smin;
  const double span = detrended.epochs().back() - t0;
  const double lowest = *std::min_element(freqs.frequencies.begin(),
                                          freqs.frequencies.end());
  fit.spans_lowest_frequency = span * lowest >= 1.0;
  fit.model.terms.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double a_sh = sol(static_cast<Eigen::Index>(2 * j));
    const double b_sh = sol(static_cast<Eigen::Index>(2 * j + 1));
    const double phase = kTwoPi * freqs.frequencies[j] * t0;
    const double cp = std::cos(phase);
    const double sp = std::sin(phase);
    // a cos(w(t-t0)) + b sin(w(t-t0)) = (a cp - b sp)... expand about t
    HarmonicTerm term;
    term.frequency = freqs.frequencies[j];
    term.a = a_sh * cp - b_sh * sp;
    term.b = a_sh * sp + b_sh * cp;
    fit.model.terms.push_back(term);
  }
  return fit;
}

ScalarSeries evaluate_harmonics(const HarmonicModel& model,
                                const std::vector<Epoch>& epochs) {
  std::vector<double> values(epochs.size(), 0.0);
  for (std::size_t i = 0; i < epochs.size(); ++i) {
    double acc = 0.0;
    for (const auto& term : model.terms) {
      const double arg = kTwoPi * term.frequency * epochs[i];
      acc += term.a * std::cos(arg) + term.b * std::sin(arg);
    }
    values[i] = acc;
  }
  return ScalarSeries(epochs, std::move(values));
}

SeriesDecomposition remove_periodic(const ScalarSeries& s,
                                    const TrendLine& line,
                                    const HarmonicModel& model) {
  SeriesDecomposition d;
  d.original = s;
  std::vector<double> trend(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    trend[i] = line.evaluate(s.epochs()[i]);
  d.trend = ScalarSeries(s.epochs(), std::move(trend));
  d.periodic = evaluate_harmonics(model, s.epochs());
  std::vector<double> rest(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    rest[i] = s.values()[i] - d.periodic.values()[i];
  d.trend_only = ScalarSeries(s.epochs(), std::move(rest));
  return d;
}

SeriesDecomposition decompose(const ScalarSeries& s, const FrequencyTable& freqs,
                              std::size_t n_fit) {
  if (n_fit == 0 || n_fit > s.size()) n_fit = s.size();
  std::vector<Epoch> te(s.epochs().begin(),
                        s.epochs().begin() + static_cast<long>(n_fit));
  std::vector<double> tv(s.values().begin(),
                         s.values().begin() + static_cast<long>(n_fit));
  const ScalarSeries training(std::move(te), std::move(tv));
  const TrendLine line = fit_trend_line(training);
  const HarmonicFit fit = fit_harmonics(detrend(training, line), freqs);
  return remove_periodic(s, line, fit.model);
}

} // namespace vlmcast
