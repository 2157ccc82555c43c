#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <vector>

#include "engines.hpp"

namespace vlmcast::detail {

namespace {

struct Node {
  int feature = -1; ///< -1 marks a leaf
  double threshold = 0.0;
  double value = 0.0; ///< leaf prediction
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
};

double mean_of(const Eigen::VectorXd& y, const std::vector<Eigen::Index>& idx) {
  double m = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    m += (y(idx[i]) - m) / static_cast<double>(i + 1);
  return m;
}

/// Greedy axis-aligned splitter minimizing the summed squared error of the
/// two children. Thresholds are midpoints between consecutive distinct
/// feature values, so the tree is shift-equivariant along with its data.
std::unique_ptr<Node> grow(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           std::vector<Eigen::Index> idx, int depth,
                           int max_depth, std::size_t min_leaf) {
  auto node = std::make_unique<Node>();
  node->value = mean_of(y, idx);

  if (depth >= max_depth || idx.size() < 2 * min_leaf) return node;

  double ysum = 0.0, y2sum = 0.0;
  for (const auto i : idx) {
    ysum += y(i);
    y2sum += y(i) * y(i);
  }
  const double parent_sse =
      y2sum - ysum * ysum / static_cast<double>(idx.size());
  if (parent_sse <= 0.0) return node;

  double best_gain = 0.0;
  int best_feature = -1;
  double best_threshold = 0.0;

  std::vector<Eigen::Index> order(idx);
  for (int f = 0; f < x.cols(); ++f) {
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return x(a, f) < x(b, f) || (x(a, f) == x(b, f) && a < b);
    });
    double lsum = 0.0, l2sum = 0.0;
    double rsum = ysum, r2sum = y2sum;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const double yi = y(order[k]);
      lsum += yi;
      l2sum += yi * yi;
      rsum -= yi;
      r2sum -= yi * yi;
      if (x(order[k], f) == x(order[k + 1], f)) continue;
      const auto nl = k + 1;
      const auto nr = order.size() - nl;
      if (nl < min_leaf || nr < min_leaf) continue;
      const double sse = (l2sum - lsum * lsum / static_cast<double>(nl)) +
                         (r2sum - rsum * rsum / static_cast<double>(nr));
      const double gain = parent_sse - sse;
      if (gain > best_gain) {
        best_gain = gain;
        best_feature = f;
        best_threshold = 0.5 * (x(order[k], f) + x(order[k + 1], f));
      }
    }
  }
  if (best_feature < 0) return node;

  std::vector<Eigen::Index> left, right;
  for (const auto i : idx)
    (x(i, best_feature) <= best_threshold ? left : right).push_back(i);
  if (left.empty() || right.empty()) return node;

  node->feature = best_feature;
  node->threshold = best_threshold;
  node->left = grow(x, y, std::move(left), depth + 1, max_depth, min_leaf);
  node->right = grow(x, y, std::move(right), depth + 1, max_depth, min_leaf);
  return node;
}

class CartRegressor final : public Regressor {
public:
  CartRegressor(std::unique_ptr<Node> root) : root_(std::move(root)) {}

  double predict(const Eigen::VectorXd& window) const override {
    const Node* n = root_.get();
    while (n->feature >= 0)
      n = (window(n->feature) <= n->threshold) ? n->left.get() : n->right.get();
    return n->value;
  }

private:
  std::unique_ptr<Node> root_;
};

} // namespace

FittedModel fit_cart(const ModelSpec& spec, const WindowedDataset& data) {
  const ParamReader p(spec.params, {"max_depth", "min_leaf"});
  const int max_depth = static_cast<int>(p.number("max_depth", 8));
  const auto min_leaf = static_cast<std::size_t>(p.number("min_leaf", 5));
  if (max_depth < 0) throw std::invalid_argument("cart: max_depth must be >= 0");
  if (min_leaf < 1) throw std::invalid_argument("cart: min_leaf must be >= 1");

  std::vector<Eigen::Index> idx(static_cast<std::size_t>(data.inputs.rows()));
  std::iota(idx.begin(), idx.end(), 0);
  auto root = grow(data.inputs, data.targets, std::move(idx), 0, max_depth,
                   min_leaf);

  FittedModel m;
  m.spec = spec;
  CartRegressor reg(std::move(root));
  double sse = 0.0;
  for (Eigen::Index i = 0; i < data.inputs.rows(); ++i) {
    const double e =
        reg.predict(data.inputs.row(i).transpose()) - data.targets(i);
    sse += e * e;
  }
  m.train_residual =
      std::sqrt(sse / static_cast<double>(std::max<Eigen::Index>(
                          data.inputs.rows(), 1)));
  m.engine = std::make_shared<CartRegressor>(std::move(reg));
  return m;
}

} // namespace vlmcast::detail
