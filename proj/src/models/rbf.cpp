#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "engines.hpp"
#include "vlmcast/errors.hpp"

namespace vlmcast::detail {

namespace {

/// k-means++ style center seeding followed by a few Lloyd sweeps; all
/// randomness comes from the spec seed.
Eigen::MatrixXd pick_centers(const Eigen::MatrixXd& x, std::size_t n_centers,
                             std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(x.rows());
  n_centers = std::min(n_centers, n);
  std::mt19937_64 rng(seed);

  std::vector<std::size_t> chosen;
  std::uniform_int_distribution<std::size_t> first(0, n - 1);
  chosen.push_back(first(rng));

  std::vector<double> d2(n, 0.0);
  while (chosen.size() < n_centers) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto c : chosen)
        best = std::min(best, (x.row(static_cast<Eigen::Index>(i)) -
                               x.row(static_cast<Eigen::Index>(c)))
                                  .squaredNorm());
      d2[i] = best;
      total += best;
    }
    if (total <= 0.0) break; // fewer distinct points than centers
    std::uniform_real_distribution<double> u(0.0, total);
    double r = u(rng);
    std::size_t pick = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
      r -= d2[i];
      if (r <= 0.0) {
        pick = i;
        break;
      }
    }
    chosen.push_back(pick);
  }

  Eigen::MatrixXd centers(static_cast<Eigen::Index>(chosen.size()), x.cols());
  for (std::size_t i = 0; i < chosen.size(); ++i)
    centers.row(static_cast<Eigen::Index>(i)) =
        x.row(static_cast<Eigen::Index>(chosen[i]));

  // Lloyd refinement
  std::vector<Eigen::Index> assign(n);
  for (int sweep = 0; sweep < 10; ++sweep) {
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      Eigen::Index bj = 0;
      for (Eigen::Index j = 0; j < centers.rows(); ++j) {
        const double d =
            (x.row(static_cast<Eigen::Index>(i)) - centers.row(j)).squaredNorm();
        if (d < best) {
          best = d;
          bj = j;
        }
      }
      assign[i] = bj;
    }
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(centers.rows(), x.cols());
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(centers.rows());
    for (std::size_t i = 0; i < n; ++i) {
      sums.row(assign[i]) += x.row(static_cast<Eigen::Index>(i));
      counts(assign[i]) += 1.0;
    }
    for (Eigen::Index j = 0; j < centers.rows(); ++j)
      if (counts(j) > 0.0) centers.row(j) = sums.row(j) / counts(j);
  }
  return centers;
}

class RbfRegressor final : public Regressor {
public:
  RbfRegressor(Eigen::MatrixXd centers, Eigen::VectorXd weights, double bias,
               double width)
      : centers_(std::move(centers)), weights_(std::move(weights)),
        bias_(bias), inv2s2_(0.5 / (width * width)) {}

  double predict(const Eigen::VectorXd& window) const override {
    double acc = bias_;
    for (Eigen::Index j = 0; j < centers_.rows(); ++j)
      acc += weights_(j) *
             std::exp(-(centers_.row(j).transpose() - window).squaredNorm() *
                      inv2s2_);
    return acc;
  }

private:
  Eigen::MatrixXd centers_;
  Eigen::VectorXd weights_;
  double bias_;
  double inv2s2_;
};

} // namespace

FittedModel fit_rbf(const ModelSpec& spec, const WindowedDataset& data) {
  const ParamReader p(spec.params, {"centers", "width"});
  const auto n_centers = static_cast<std::size_t>(p.number("centers", 50));
  if (n_centers < 1) throw std::invalid_argument("rbf: centers must be >= 1");

  const Eigen::MatrixXd centers = pick_centers(data.inputs, n_centers, spec.seed);

  double width = p.number("width", 0.0);
  if (width <= 0.0) {
    // median distance between distinct centers
    std::vector<double> d;
    for (Eigen::Index i = 0; i < centers.rows(); ++i)
      for (Eigen::Index j = i + 1; j < centers.rows(); ++j) {
        const double dij = (centers.row(i) - centers.row(j)).norm();
        if (dij > 0.0) d.push_back(dij);
      }
    if (d.empty()) {
      width = 1.0;
    } else {
      std::nth_element(d.begin(), d.begin() + static_cast<long>(d.size() / 2),
                       d.end());
      width = d[d.size() / 2];
    }
  }

  // linear output layer by least squares, with a bias column
  const auto n = data.inputs.rows();
  Eigen::MatrixXd design(n, centers.rows() + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < centers.rows(); ++j)
      design(i, j) = std::exp(
          -(data.inputs.row(i) - centers.row(j)).squaredNorm() * 0.5 /
          (width * width));
    design(i, centers.rows()) = 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (!(svd.singularValues()(svd.singularValues().size() - 1) >
        svd.singularValues()(0) * 1e-14) &&
      svd.singularValues()(0) <= 0.0)
    throw ConditioningError("rbf: singular design matrix");
  const Eigen::VectorXd sol = svd.solve(data.targets);

  FittedModel m;
  m.spec = spec;
  const Eigen::VectorXd residual = design * sol - data.targets;
  m.train_residual =
      std::sqrt(residual.squaredNorm() / static_cast<double>(n));
  m.engine = std::make_shared<RbfRegressor>(
      centers, sol.head(centers.rows()), sol(centers.rows()), width);
  return m;
}

} // namespace vlmcast::detail
