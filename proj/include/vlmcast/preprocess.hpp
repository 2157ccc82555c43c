#ifndef VLMCAST_PREPROCESS_HPP
#define VLMCAST_PREPROCESS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "vlmcast/series.hpp"

namespace vlmcast {

/// Least-squares secular trend y = c*t + d.
struct TrendLine {
  double c = 0.0; ///< slope, meters per sidereal year
  double d = 0.0; ///< intercept, meters
  double evaluate(Epoch t) const { return c * t + d; }
};

/// One periodic term: frequency [cycles per sidereal year] and the cosine /
/// sine amplitudes [m].
struct HarmonicTerm {
  double frequency = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Sum of cosine/sine pairs at fixed frequencies.
struct HarmonicModel {
  std::vector<HarmonicTerm> terms;
  std::size_t degree() const { return terms.size(); }
};

/// The fixed set of tidal/atmospheric lines used for signal removal. Each
/// entry keeps the fundamental period in days, the period re-expressed in
/// sidereal years (the tabulated form) and the true frequency in cycles per
/// sidereal year.
struct FrequencyTable {
  std::vector<double> periods_days;
  std::vector<double> frequencies; ///< cycles per sidereal year

  double listed_value(std::size_t i) const {
    return periods_days[i] / kDaysPerSiderealYear;
  }
  std::size_t size() const { return periods_days.size(); }

  static FrequencyTable from_periods_days(std::vector<double> periods);
};

/// The six fundamental atmospheric/tidal periods (0.5, 1, 14, 30, 180.1 and
/// 359.5 days), ascending.
FrequencyTable default_frequency_table();

/// Four aligned views of one scalar series: original, trend line, fitted
/// periodic part and the trend-only residual (original minus periodic).
struct SeriesDecomposition {
  ScalarSeries original;
  ScalarSeries trend;
  ScalarSeries periodic;
  ScalarSeries trend_only;
};

struct HarmonicFit {
  HarmonicModel model;
  double condition_number = 0.0;
  bool spans_lowest_frequency = true; ///< at least one cycle of the slowest line
};

/// Least-squares line through (t, y) solved by SVD. Throws
/// ConditioningError when all epochs coincide, std::domain_error for fewer
/// than 2 points.
TrendLine fit_trend_line(const ScalarSeries& s);

/// Pointwise subtraction of the line.
ScalarSeries detrend(const ScalarSeries& s, const TrendLine& line);

/// Least-squares cosine/sine amplitudes at the table frequencies. Requires
/// at least 2*m samples; reports the design-matrix condition number and
/// whether the epochs span one cycle of the lowest frequency. Throws
/// ConditioningError on rank deficiency.
HarmonicFit fit_harmonics(const ScalarSeries& detrended,
                          const FrequencyTable& freqs);

/// Evaluate sum_i a_i cos(2 pi f_i t) + b_i sin(2 pi f_i t) on epochs.
ScalarSeries evaluate_harmonics(const HarmonicModel& model,
                                const std::vector<Epoch>& epochs);

/// Assemble the full decomposition of s against a fitted trend + harmonic
/// model: trend_only = s - periodic, evaluated pointwise.
SeriesDecomposition remove_periodic(const ScalarSeries& s,
                                    const TrendLine& line,
                                    const HarmonicModel& model);

/// Fit trend then harmonics on the first n_fit samples (the whole series
/// when n_fit == 0) and decompose the full series.
SeriesDecomposition decompose(const ScalarSeries& s, const FrequencyTable& freqs,
                              std::size_t n_fit = 0);

} // namespace vlmcast

#endif
