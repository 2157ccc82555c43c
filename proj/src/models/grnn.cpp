#include <cmath>
#include <vector>

#include "engines.hpp"

namespace vlmcast::detail {

namespace {

/// Nadaraya-Watson kernel regression with a Gaussian kernel. Weights are
/// normalized against the closest sample so the bandwidth -> 0 limit
/// degrades gracefully to 1-NN instead of 0/0.
class GrnnRegressor final : public Regressor {
public:
  GrnnRegressor(Eigen::MatrixXd inputs, Eigen::VectorXd targets,
                double bandwidth)
      : inputs_(std::move(inputs)), targets_(std::move(targets)),
        inv2s2_(0.5 / (bandwidth * bandwidth)) {}

  double predict(const Eigen::VectorXd& window) const override {
    const auto n = inputs_.rows();
    Eigen::VectorXd d2(n);
    double d2min = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      d2(i) = (inputs_.row(i).transpose() - window).squaredNorm();
      d2min = std::min(d2min, d2(i));
    }
    double wsum = 0.0, acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double w = std::exp(-(d2(i) - d2min) * inv2s2_);
      wsum += w;
      acc += w * targets_(i);
    }
    return acc / wsum;
  }

private:
  Eigen::MatrixXd inputs_;
  Eigen::VectorXd targets_;
  double inv2s2_;
};

} // namespace

FittedModel fit_grnn(const ModelSpec& spec, const WindowedDataset& data) {
  const ParamReader p(spec.params, {"bandwidth"});
  double bw = p.number("bandwidth", 0.0);
  if (bw <= 0.0) {
    // Silverman-style rule on the inputs
    const auto n = static_cast<double>(data.inputs.rows());
    const auto d = static_cast<double>(data.inputs.cols());
    const Eigen::RowVectorXd mean = data.inputs.colwise().mean();
    const double var =
        (data.inputs.rowwise() - mean).squaredNorm() / (n * d);
    const double sigma = std::sqrt(std::max(var, 1e-300));
    bw = sigma * std::pow(4.0 / (d + 2.0), 1.0 / (d + 4.0)) *
         std::pow(n, -1.0 / (d + 4.0));
  }
  FittedModel m;
  m.spec = spec;
  m.engine = std::make_shared<GrnnRegressor>(data.inputs, data.targets, bw);
  return m;
}

} // namespace vlmcast::detail
