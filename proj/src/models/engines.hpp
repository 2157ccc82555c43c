#ifndef VLMCAST_MODELS_ENGINES_HPP
#define VLMCAST_MODELS_ENGINES_HPP

#include <initializer_list>
#include <map>
#include <string>

#include "vlmcast/forecast.hpp"

namespace vlmcast::detail {

/// Validating accessor for ModelSpec::params: construction rejects keys the
/// engine does not understand.
class ParamReader {
public:
  ParamReader(const std::map<std::string, std::string>& params,
              std::initializer_list<const char*> allowed);
  double number(const std::string& key, double dflt) const;
  std::string text(const std::string& key, const std::string& dflt) const;
  bool has(const std::string& key) const;

private:
  const std::map<std::string, std::string>& params_;
};

FittedModel fit_knn(const ModelSpec& spec, const WindowedDataset& data);
FittedModel fit_grnn(const ModelSpec& spec, const WindowedDataset& data);
FittedModel fit_cart(const ModelSpec& spec, const WindowedDataset& data);
FittedModel fit_gp(const ModelSpec& spec, const WindowedDataset& data);
FittedModel fit_rbf(const ModelSpec& spec, const WindowedDataset& data);
FittedModel fit_mlp(const ModelSpec& spec, const WindowedDataset& data);
FittedModel fit_svr(const ModelSpec& spec, const WindowedDataset& data);
FittedModel fit_theta_engine(const ModelSpec& spec, const WindowedDataset& data);

} // namespace vlmcast::detail

#endif
