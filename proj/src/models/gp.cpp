#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Cholesky>

#include "engines.hpp"
#include "vlmcast/errors.hpp"

namespace vlmcast::detail {

namespace {

enum class GpKernel { Se, SePlusLinear };

GpKernel kernel_from_string(const std::string& name) {
  if (name == "se") return GpKernel::Se;
  if (name == "se_plus_linear") return GpKernel::SePlusLinear;
  throw std::invalid_argument("gp: unknown kernel '" + name + "'");
}

struct KernelParams {
  GpKernel kind = GpKernel::Se;
  double signal_var = 1.0;
  double length_scale = 1.0;
  double linear_scale = 1.0; ///< mean squared input norm
};

double kernel_value(const KernelParams& k, const Eigen::VectorXd& a,
                    const Eigen::VectorXd& b) {
  double v = 0.0;
  const double d2 = (a - b).squaredNorm();
  v += k.signal_var * std::exp(-0.5 * d2 / (k.length_scale * k.length_scale));
  if (k.kind == GpKernel::SePlusLinear)
    v += k.signal_var * (1.0 + a.dot(b) / k.linear_scale);
  return v;
}

/// Exact GP posterior mean with constant-mean handling: the training-target
/// mean is removed before the solve and restored at prediction.
class GpRegressor final : public Regressor {
public:
  GpRegressor(Eigen::MatrixXd inputs, Eigen::VectorXd alpha, KernelParams k,
              double target_mean)
      : inputs_(std::move(inputs)), alpha_(std::move(alpha)), k_(k),
        target_mean_(target_mean) {}

  double predict(const Eigen::VectorXd& window) const override {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < inputs_.rows(); ++i)
      acc += alpha_(i) * kernel_value(k_, inputs_.row(i).transpose(), window);
    return acc + target_mean_;
  }

private:
  Eigen::MatrixXd inputs_;
  Eigen::VectorXd alpha_;
  KernelParams k_;
  double target_mean_;
};

double median_pairwise_distance(const Eigen::MatrixXd& x) {
  std::vector<double> d;
  const auto n = x.rows();
  d.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dij = (x.row(i) - x.row(j)).norm();
      if (dij > 0.0) d.push_back(dij);
    }
  if (d.empty()) return 1.0;
  std::nth_element(d.begin(), d.begin() + static_cast<long>(d.size() / 2),
                   d.end());
  return d[d.size() / 2];
}

} // namespace

FittedModel fit_gp(const ModelSpec& spec, const WindowedDataset& data) {
  const ParamReader p(spec.params,
                      {"kernel", "length_scale", "noise", "jitter", "signal_var"});

  KernelParams k;
  k.kind = kernel_from_string(p.text("kernel", "se"));

  const auto n = data.targets.size();
  const double target_mean = data.targets.mean();
  const Eigen::VectorXd y = data.targets.array() - target_mean;
  const double target_var =
      n > 1 ? y.squaredNorm() / static_cast<double>(n - 1) : 1.0;

  k.signal_var = p.number("signal_var", std::max(target_var, 1e-300));
  k.length_scale = p.number("length_scale", median_pairwise_distance(data.inputs));
  k.linear_scale = std::max(
      data.inputs.rowwise().squaredNorm().mean(), 1e-300);
  const double noise = p.number("noise", 1e-4 * target_var);
  double jitter = p.number("jitter", 1e-10);

  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = kernel_value(k, data.inputs.row(i).transpose(),
                                    data.inputs.row(j).transpose());
      gram(i, j) = v;
      gram(j, i) = v;
    }

  Eigen::VectorXd alpha;
  const double scale = std::max(k.signal_var, 1e-300);
  bool solved = false;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXd sys = gram;
    sys.diagonal().array() += noise + jitter * scale;
    Eigen::LLT<Eigen::MatrixXd> llt(sys);
    if (llt.info() == Eigen::Success) {
      alpha = llt.solve(y);
      solved = true;
      break;
    }
    jitter *= 10.0;
  }
  if (!solved)
    throw ConditioningError("gp: kernel matrix not positive definite; "
                            "increase jitter or noise");

  FittedModel m;
  m.spec = spec;
  GpRegressor reg(data.inputs, std::move(alpha), k, target_mean);
  double sse = 0.0;
  for (Eigen::Index i = 0; i < data.inputs.rows(); ++i) {
    const double e =
        reg.predict(data.inputs.row(i).transpose()) - data.targets(i);
    sse += e * e;
  }
  m.train_residual = std::sqrt(sse / static_cast<double>(n));
  m.engine = std::make_shared<GpRegressor>(std::move(reg));
  return m;
}

} // namespace vlmcast::detail
